//! Experiment orchestration: configuration files, experiment runs with
//! CSV metrics, the verification suite, and timing measurements.

pub mod bench;
pub mod config;
pub mod experiment;
pub mod metrics;
pub mod verify;

pub use bench::{measure_flatness, measure_scaling, FlatnessReport, ScalingPoint};
pub use config::{DatasetConfig, ExperimentConfig, LearnerConfig};
pub use experiment::{
    build_experiment_data, run_experiment, run_experiment_on, ExperimentData, MetricsRow,
    RunReport, SeedFailure,
};
pub use metrics::{emit_metrics_csv, format_metrics_csv, parse_metrics_csv, CSV_HEADER};
pub use verify::{verify_suite, PropertyCheck, PropertyReport, VerifyScale};
