//! CSV serialization of metric rows: fixed header, 17-significant-digit
//! floats, LF line endings. The format round-trips `f64` exactly.

use std::path::Path;

use crate::error::{Error, Result};
use crate::harness::experiment::MetricsRow;

/// The exact header line (without the trailing newline).
pub const CSV_HEADER: &str = "seed,step,train_error,test_error,tracked_pred_error,wall_micros";

/// Renders rows to CSV text. Floats use scientific notation with 17
/// significant digits, which reproduces every `f64` bit for bit on
/// parse; lines end with `\n` only.
pub fn format_metrics_csv(rows: &[MetricsRow]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&format!(
            "{},{},{:.16e},{:.16e},{:.16e},{}\n",
            row.seed,
            row.step,
            row.train_error,
            row.test_error,
            row.tracked_pred_error,
            row.wall_micros
        ));
    }
    out
}

/// Writes [`format_metrics_csv`] output to `path`.
pub fn emit_metrics_csv(rows: &[MetricsRow], path: &Path) -> Result<()> {
    std::fs::write(path, format_metrics_csv(rows)).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })
}

/// Parses a file produced by [`emit_metrics_csv`] back into rows.
pub fn parse_metrics_csv(path: &Path) -> Result<Vec<MetricsRow>> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })?;
    let corrupt = |line_no: usize, message: String| Error::CorruptFile {
        path: path.to_path_buf(),
        message: format!("line {line_no}: {message}"),
    };
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header == CSV_HEADER => {}
        Some((_, other)) => {
            return Err(corrupt(1, format!("unexpected header {other:?}")));
        }
        None => return Err(corrupt(1, "empty file".into())),
    }
    let mut rows = Vec::new();
    for (i, line) in lines {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 6 {
            return Err(corrupt(
                i + 1,
                format!("{} fields, expected 6", fields.len()),
            ));
        }
        let parse_u = |s: &str, what: &str| -> Result<u64> {
            s.parse()
                .map_err(|e| corrupt(i + 1, format!("bad {what} {s:?}: {e}")))
        };
        let parse_f = |s: &str, what: &str| -> Result<f64> {
            s.parse()
                .map_err(|e| corrupt(i + 1, format!("bad {what} {s:?}: {e}")))
        };
        rows.push(MetricsRow {
            seed: parse_u(fields[0], "seed")?,
            step: parse_u(fields[1], "step")? as usize,
            train_error: parse_f(fields[2], "train_error")?,
            test_error: parse_f(fields[3], "test_error")?,
            tracked_pred_error: parse_f(fields[4], "tracked_pred_error")?,
            wall_micros: parse_u(fields[5], "wall_micros")?,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(seed: u64, step: usize, a: f64, b: f64, c: f64, w: u64) -> MetricsRow {
        MetricsRow {
            seed,
            step,
            train_error: a,
            test_error: b,
            tracked_pred_error: c,
            wall_micros: w,
        }
    }

    #[test]
    fn empty_rows_give_a_header_only_file() {
        let text = format_metrics_csv(&[]);
        assert_eq!(text, format!("{CSV_HEADER}\n"));
    }

    #[test]
    fn round_trip_is_exact_including_nan_and_subnormals() {
        let rows = vec![
            row(1, 1, 0.1, 1.0 / 3.0, f64::NAN, 42),
            row(1, 2, 5e-324, 1e308, 0.0, 0),
            row(2, 1, -1.5, std::f64::consts::PI, 2.0f64.powi(-60), 7),
        ];
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.csv");
        emit_metrics_csv(&rows, &path).unwrap();
        let back = parse_metrics_csv(&path).unwrap();
        assert_eq!(rows, back);
        // LF-only line endings.
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(!text.contains('\r'));
        assert_eq!(text.lines().count(), 4);
    }

    #[test]
    fn line_count_is_rows_plus_header() {
        let rows: Vec<MetricsRow> = (0..10)
            .flat_map(|seed| (1..=100).map(move |step| row(seed, step, 0.0, 0.0, 0.0, 0)))
            .collect();
        let text = format_metrics_csv(&rows);
        assert_eq!(text.lines().count(), 1001);
    }

    #[test]
    fn rejects_malformed_files() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.csv");
        std::fs::write(&path, "wrong,header\n").unwrap();
        assert!(matches!(
            parse_metrics_csv(&path).unwrap_err(),
            Error::CorruptFile { .. }
        ));
        std::fs::write(&path, format!("{CSV_HEADER}\n1,2,3\n")).unwrap();
        assert!(matches!(
            parse_metrics_csv(&path).unwrap_err(),
            Error::CorruptFile { .. }
        ));
        std::fs::write(&path, format!("{CSV_HEADER}\n1,2,x,0,0,0\n")).unwrap();
        assert!(matches!(
            parse_metrics_csv(&path).unwrap_err(),
            Error::CorruptFile { .. }
        ));
    }
}
