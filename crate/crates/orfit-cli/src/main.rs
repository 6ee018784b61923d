//! `orfit` — command-line front end for the streaming regression toolkit.
//!
//! Subcommands:
//! - `run`        stream an experiment from a JSON config, write CSV metrics
//! - `verify`     run the mathematical property suite
//! - `fetch-data` download and checksum the MNIST archives
//! - `bench`      measure per-step cost flatness and scaling
//!
//! Exit codes: 0 success, 1 property or runtime failure, 2 configuration
//! error, 3 data ingestion error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use orfit::error::Error;
use orfit::harness::{
    emit_metrics_csv, measure_flatness, measure_scaling, run_experiment, verify_suite,
    ExperimentConfig, VerifyScale,
};
use orfit::stream::fetch_mnist;

#[derive(Parser)]
#[command(
    name = "orfit",
    version,
    about = "Streaming one-pass regression: experiments, verification, benchmarks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ScaleArg {
    Quick,
    Full,
}

impl From<ScaleArg> for VerifyScale {
    fn from(s: ScaleArg) -> Self {
        match s {
            ScaleArg::Quick => VerifyScale::Quick,
            ScaleArg::Full => VerifyScale::Full,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run an experiment from a JSON config and write metrics as CSV.
    Run {
        /// Path to the experiment config (JSON).
        #[arg(long)]
        config: PathBuf,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
        /// Override the config's seed list (comma-separated).
        #[arg(long, value_delimiter = ',')]
        seeds: Option<Vec<u64>>,
        /// Override the config's data directory (rotated MNIST only).
        #[arg(long)]
        data_dir: Option<PathBuf>,
    },
    /// Run the verification suite and print one line per property.
    Verify {
        /// How much work to do.
        #[arg(long, value_enum, default_value_t = ScaleArg::Quick)]
        scale: ScaleArg,
    },
    /// Download the MNIST archives into a directory, verifying checksums.
    FetchData {
        /// Destination directory.
        #[arg(long)]
        dir: PathBuf,
    },
    /// Measure per-step cost: flatness over a stream and scaling in p.
    Bench {
        /// Parameter counts for the scaling comparison (comma-separated).
        #[arg(long, value_delimiter = ',', default_values_t = [256usize, 1024, 4096])]
        p: Vec<usize>,
        /// Memory cap for the bounded learner.
        #[arg(long, default_value_t = 10)]
        m: usize,
        /// Stream length for the flatness measurement.
        #[arg(long, default_value_t = 120)]
        steps: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn dispatch(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Run {
            config,
            out,
            seeds,
            data_dir,
        } => cmd_run(&config, &out, seeds, data_dir),
        Command::Verify { scale } => cmd_verify(scale.into()),
        Command::FetchData { dir } => cmd_fetch(&dir),
        Command::Bench { p, m, steps } => cmd_bench(&p, m, steps),
    }
}

fn cmd_run(
    config_path: &Path,
    out: &Path,
    seeds: Option<Vec<u64>>,
    data_dir: Option<PathBuf>,
) -> Result<ExitCode, Error> {
    let mut cfg = ExperimentConfig::from_json_file(config_path)?;
    if let Some(seeds) = seeds {
        cfg.seeds = seeds;
    }
    if let Some(dir) = data_dir {
        cfg.set_data_dir(dir);
    }
    cfg.validate()?;
    let report = run_experiment(&cfg)?;
    emit_metrics_csv(&report.rows, out)?;
    println!(
        "wrote {} metric rows for {} seed(s) to {}",
        report.rows.len(),
        cfg.seeds.len(),
        out.display()
    );
    for f in &report.failures {
        println!("seed {} stopped at step {}: {}", f.seed, f.step, f.message);
    }
    for row in report.final_rows() {
        println!(
            "seed {} final: train_rmse={:.6e} test_rmse={:.6e} tracked={:.6e}",
            row.seed, row.train_error, row.test_error, row.tracked_pred_error
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(scale: VerifyScale) -> Result<ExitCode, Error> {
    let report = verify_suite(scale);
    print!("{}", report.render());
    if report.all_passed() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn cmd_fetch(dir: &Path) -> Result<ExitCode, Error> {
    let paths = fetch_mnist(dir)?;
    println!("MNIST archives verified in {}", dir.display());
    println!("  train images: {}", paths.train_images.display());
    println!("  train labels: {}", paths.train_labels.display());
    println!("  test images:  {}", paths.test_images.display());
    println!("  test labels:  {}", paths.test_labels.display());
    Ok(ExitCode::SUCCESS)
}

fn cmd_bench(sizes: &[usize], m: usize, steps: usize) -> Result<ExitCode, Error> {
    let flat = measure_flatness(784, m, steps)?;
    println!(
        "flatness p={} m={} steps={}: early median {:.1} us, late median {:.1} us, ratio {:.2}",
        flat.p,
        flat.memory_cap,
        flat.steps,
        flat.early_median_micros,
        flat.late_median_micros,
        flat.ratio
    );
    let points = measure_scaling(sizes, m, 20)?;
    println!("scaling (bounded learner vs full recursion, m={m}):");
    println!(
        "{:>8} {:>14} {:>14} {:>8}",
        "p", "orfit_us", "ewrls_us", "ratio"
    );
    for pt in &points {
        println!(
            "{:>8} {:>14.1} {:>14.1} {:>8.2}",
            pt.p, pt.orfit_micros, pt.ewrls_micros, pt.ratio
        );
    }
    Ok(ExitCode::SUCCESS)
}
