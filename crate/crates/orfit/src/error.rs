//! Error type shared across the crate.

use std::path::PathBuf;
use thiserror::Error;

/// Unified error type for every fallible operation in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Two objects that must agree in dimension do not.
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    /// A basis vector fell below the representable-norm floor.
    #[error("degenerate basis: vector {index} has norm {norm:.3e} (at or below {floor:.3e})")]
    DegenerateBasis { index: usize, norm: f64, floor: f64 },

    /// An input violated a documented precondition.
    #[error("contract violation: {0}")]
    ContractViolation(String),

    /// An iterative routine failed to converge or produced an unusable value.
    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    /// The stream demanded an update no feasible direction can satisfy:
    /// the sample contradicts already-fitted data.
    #[error(
        "inconsistent stream at step {step}: residual {residual:.3e} \
         with no feasible update direction"
    )]
    InconsistentStream { step: usize, residual: f64 },

    /// A constraint system was rank-deficient where full rank was required.
    #[error("rank-deficient or inconsistent constraint system: {0}")]
    DegenerateSystem(String),

    /// Invalid configuration (bad field value, impossible combination).
    #[error("configuration error: {0}")]
    Configuration(String),

    /// A data file could not be interpreted in its declared format.
    #[error("format error in {path}: {message}")]
    Format { path: PathBuf, message: String },

    /// A data file was readable but internally inconsistent.
    #[error("corrupt file {path}: {message}")]
    CorruptFile { path: PathBuf, message: String },

    /// A dataset had fewer usable records than the caller requested.
    #[error("insufficient data: need {needed}, found {available}")]
    InsufficientData { needed: usize, available: usize },

    /// An iterate left the trust region; the optimizer diverged.
    #[error("divergence: parameter norm {norm:.3e} exceeded {limit:.3e}")]
    Divergence { norm: f64, limit: f64 },

    /// A downloaded or on-disk artifact failed its checksum.
    #[error("checksum mismatch for {path}: expected {expected}, got {got}")]
    ChecksumMismatch {
        path: PathBuf,
        expected: String,
        got: String,
    },

    /// A network fetch failed.
    #[error("fetch failed for {url}: {message}")]
    Fetch { url: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serialization(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for command-line reporting: 2 for configuration
    /// problems, 3 for data ingestion problems, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Configuration(_) => 2,
            Error::Format { .. }
            | Error::CorruptFile { .. }
            | Error::InsufficientData { .. }
            | Error::ChecksumMismatch { .. }
            | Error::Fetch { .. }
            | Error::Io(_) => 3,
            _ => 1,
        }
    }
}
