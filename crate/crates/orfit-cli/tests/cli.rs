//! End-to-end tests of the `orfit` binary: exit codes, output files,
//! and determinism, all through the real process boundary.

use std::path::Path;
use std::process::{Command, Output};

fn orfit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orfit"))
        .args(args)
        .output()
        .expect("spawn orfit")
}

fn write_config(path: &Path, text: &str) {
    std::fs::write(path, text).expect("write config");
}

const SYNTH_CONFIG: &str = r#"{
    "dataset": {"kind": "synthetic", "p": 24, "k": 12,
                "generator": "gaussian_linear", "test_size": 32},
    "learner": {"kind": "orfit", "memory": {"kind": "unbounded"}},
    "seeds": [3, 4],
    "tracked_sample_index": 2,
    "data_seed": 11
}"#;

#[test]
fn run_writes_deterministic_csv_and_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    write_config(&cfg, SYNTH_CONFIG);
    let out1 = dir.path().join("a.csv");
    let out2 = dir.path().join("b.csv");

    let r1 = orfit(&[
        "run",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        out1.to_str().unwrap(),
    ]);
    assert!(
        r1.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&r1.stderr)
    );
    let r2 = orfit(&[
        "run",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        out2.to_str().unwrap(),
    ]);
    assert!(r2.status.success());

    let a = std::fs::read(&out1).unwrap();
    let b = std::fs::read(&out2).unwrap();
    assert_eq!(a, b, "identical config and seeds must give identical bytes");

    let text = String::from_utf8(a).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "seed,step,train_error,test_error,tracked_pred_error,wall_micros"
    );
    // Two seeds, twelve steps each.
    assert_eq!(lines.count(), 24);
}

#[test]
fn seed_override_changes_the_rows() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    write_config(&cfg, SYNTH_CONFIG);
    let out = dir.path().join("c.csv");
    let r = orfit(&[
        "run",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
        "--seeds",
        "9",
    ]);
    assert!(r.status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    // One seed, twelve steps, plus the header.
    assert_eq!(text.lines().count(), 13);
    assert!(text.lines().nth(1).unwrap().starts_with("9,1,"));
}

#[test]
fn malformed_config_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.json");
    write_config(&cfg, "{ this is not json");
    let out = dir.path().join("never.csv");
    let r = orfit(&[
        "run",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(r.status.code(), Some(2));
    assert!(!out.exists());
}

#[test]
fn invalid_config_values_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.json");
    // k exceeds p: rejected by validation, not at runtime.
    write_config(
        &cfg,
        r#"{"dataset": {"kind": "synthetic", "p": 4, "k": 8, "generator": "gaussian_linear"},
            "learner": {"kind": "orfit"}, "seeds": [1]}"#,
    );
    let out = dir.path().join("never.csv");
    let r = orfit(&[
        "run",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(r.status.code(), Some(2));
}

#[test]
fn missing_config_file_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("absent.json");
    let out = dir.path().join("never.csv");
    let r = orfit(&[
        "run",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(r.status.code(), Some(3));
}

#[test]
fn missing_data_directory_exits_three_with_guidance() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("mnist.json");
    write_config(
        &cfg,
        &format!(
            r#"{{"dataset": {{"kind": "rotated_mnist", "dir": "{}", "k": 5}},
                "learner": {{"kind": "orfit"}}, "seeds": [1]}}"#,
            dir.path().join("no-data-here").display()
        ),
    );
    let out = dir.path().join("never.csv");
    let r = orfit(&[
        "run",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(r.status.code(), Some(3));
    let stderr = String::from_utf8_lossy(&r.stderr);
    assert!(
        stderr.contains("fetch-data"),
        "diagnostic should point at the fetch-data subcommand, got: {stderr}"
    );
}

#[test]
fn verify_quick_passes_and_prints_one_line_per_property() {
    let r = orfit(&["verify", "--scale", "quick"]);
    let stdout = String::from_utf8_lossy(&r.stdout);
    assert!(r.status.success(), "verify failed:\n{stdout}");
    let pass_lines = stdout.lines().filter(|l| l.starts_with("[PASS]")).count();
    assert_eq!(pass_lines, 10, "expected 10 property lines:\n{stdout}");
    assert!(!stdout.contains("[FAIL]"));
    assert!(stdout.contains("all passed"));
}

#[test]
fn bench_reports_flatness_and_scaling() {
    let r = orfit(&["bench", "--p", "32,64", "--m", "4", "--steps", "12"]);
    let stdout = String::from_utf8_lossy(&r.stdout);
    assert!(r.status.success(), "bench failed:\n{stdout}");
    assert!(stdout.contains("flatness"));
    assert!(stdout.contains("scaling"));
    assert!(stdout.lines().any(|l| l.trim_start().starts_with("32 ")));
    assert!(stdout.lines().any(|l| l.trim_start().starts_with("64 ")));
}

#[test]
fn unknown_subcommand_is_a_usage_error() {
    let r = orfit(&["frobnicate"]);
    assert!(!r.status.success());
}
