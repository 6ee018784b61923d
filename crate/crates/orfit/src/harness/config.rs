//! Experiment configuration: JSON-file schema, defaults, validation.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::baselines::BaselineConfig;
use crate::error::{Error, Result};
use crate::learner::MemoryPolicy;
use crate::model::ModelSpec;
use crate::stream::{SyntheticKind, IMAGE_SIDE};

fn default_init_scale() -> f64 {
    0.01
}

fn default_synthetic_test_size() -> usize {
    256
}

/// Where the data comes from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum DatasetConfig {
    /// Rotated-digit streams over the four IDX files found in `dir`.
    RotatedMnist { dir: PathBuf, k: usize },
    /// Seeded Gaussian stream with `k` training samples in dimension
    /// `p` plus a fresh teacher-labeled test split.
    Synthetic {
        p: usize,
        k: usize,
        #[serde(rename = "generator")]
        generator: SyntheticKind,
        #[serde(default = "default_synthetic_test_size")]
        test_size: usize,
    },
}

impl DatasetConfig {
    /// Feature dimension of the samples this dataset produces.
    pub fn input_dim(&self) -> usize {
        match self {
            DatasetConfig::RotatedMnist { .. } => IMAGE_SIDE * IMAGE_SIDE,
            DatasetConfig::Synthetic { p, .. } => *p,
        }
    }

    /// Number of training samples.
    pub fn train_len(&self) -> usize {
        match self {
            DatasetConfig::RotatedMnist { k, .. } | DatasetConfig::Synthetic { k, .. } => *k,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            DatasetConfig::RotatedMnist { k, .. } => {
                if *k == 0 {
                    return Err(Error::Configuration(
                        "rotated-digit stream needs k >= 1".into(),
                    ));
                }
            }
            DatasetConfig::Synthetic { p, k, .. } => {
                if *p == 0 || *k == 0 {
                    return Err(Error::Configuration(
                        "synthetic stream needs positive p and k".into(),
                    ));
                }
                if k > p {
                    return Err(Error::Configuration(format!(
                        "synthetic stream length {k} exceeds dimension {p}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Which learner runs on the stream.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum LearnerConfig {
    /// The one-pass interpolating learner with a memory policy.
    Orfit {
        #[serde(default = "default_orfit_memory")]
        memory: MemoryPolicy,
    },
    /// Exponentially weighted recursive least squares (linear model).
    Ewrls { lambda: f64 },
    /// The linearized recursion for general models.
    Ntkrls { lambda: f64 },
    /// One of the comparison learners.
    Baseline { baseline: BaselineConfig },
}

fn default_orfit_memory() -> MemoryPolicy {
    MemoryPolicy::Unbounded
}

impl LearnerConfig {
    pub fn validate(&self) -> Result<()> {
        match self {
            LearnerConfig::Orfit { memory } => memory.validate(),
            LearnerConfig::Ewrls { lambda } | LearnerConfig::Ntkrls { lambda } => {
                if !(0.0..=1.0).contains(lambda) {
                    return Err(Error::Configuration(format!(
                        "forgetting factor must lie in [0, 1], got {lambda}"
                    )));
                }
                Ok(())
            }
            LearnerConfig::Baseline { baseline } => baseline.validate(),
        }
    }
}

/// A complete experiment: dataset, learner, seeds, and metric options.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub dataset: DatasetConfig,
    pub learner: LearnerConfig,
    /// One run per seed; each seed draws its own initialization.
    pub seeds: Vec<u64>,
    /// 1-based position in the training stream of the sample whose
    /// prediction error is tracked step by step. Optional; when absent
    /// the tracked-error column is NaN.
    #[serde(default)]
    pub tracked_sample_index: Option<usize>,
    /// Standard deviation of the Gaussian parameter initialization.
    #[serde(default = "default_init_scale")]
    pub init_scale: f64,
    /// Seed for data generation (stream construction), separate from
    /// the per-run initialization seeds.
    #[serde(default)]
    pub data_seed: u64,
    /// Model to train. Defaults to the linear model on the dataset's
    /// feature dimension.
    #[serde(default)]
    pub model: Option<ModelSpec>,
    /// Default CSV output path (the command line can override it).
    #[serde(default)]
    pub output: Option<PathBuf>,
    /// Record real per-step wall times. Off by default so that equal
    /// configurations produce byte-identical CSV files.
    #[serde(default)]
    pub record_timing: bool,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        self.dataset.validate()?;
        self.learner.validate()?;
        if self.seeds.is_empty() {
            return Err(Error::Configuration("at least one seed is required".into()));
        }
        if !(self.init_scale.is_finite() && self.init_scale > 0.0) {
            return Err(Error::Configuration(format!(
                "init_scale must be positive and finite, got {}",
                self.init_scale
            )));
        }
        if let Some(t) = self.tracked_sample_index {
            if t == 0 {
                return Err(Error::Configuration(
                    "tracked_sample_index is 1-based; 0 is not a position".into(),
                ));
            }
            if t > self.dataset.train_len() {
                return Err(Error::Configuration(format!(
                    "tracked_sample_index {t} exceeds the stream length {}",
                    self.dataset.train_len()
                )));
            }
        }
        let model = self.resolved_model();
        model.validate()?;
        if model.input_dim() != self.dataset.input_dim() {
            return Err(Error::Configuration(format!(
                "model input dimension {} does not match the dataset's {}",
                model.input_dim(),
                self.dataset.input_dim()
            )));
        }
        if matches!(self.learner, LearnerConfig::Ewrls { .. })
            && !matches!(model, ModelSpec::Linear { .. })
        {
            return Err(Error::Configuration(
                "the least-squares recursion on raw features requires the linear model; \
                 use the linearized recursion for nonlinear models"
                    .into(),
            ));
        }
        Ok(())
    }

    /// Points a rotated-digit dataset at a different directory.
    /// No effect on synthetic datasets, which carry no files.
    pub fn set_data_dir(&mut self, new_dir: PathBuf) {
        if let DatasetConfig::RotatedMnist { dir, .. } = &mut self.dataset {
            *dir = new_dir;
        }
    }

    /// The model to train: the configured one, or linear on the
    /// dataset's feature dimension.
    pub fn resolved_model(&self) -> ModelSpec {
        self.model
            .clone()
            .unwrap_or_else(|| ModelSpec::linear(self.dataset.input_dim()))
    }

    /// Loads and validates a configuration from a JSON file.
    /// Malformed JSON or schema violations are configuration errors;
    /// an unreadable file is an I/O error.
    pub fn from_json_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            Error::Io(std::io::Error::new(
                e.kind(),
                format!("{}: {e}", path.display()),
            ))
        })?;
        let cfg: ExperimentConfig = serde_json::from_str(&text)
            .map_err(|e| Error::Configuration(format!("{}: {e}", path.display())))?;
        cfg.validate()?;
        Ok(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn minimal_synthetic() -> ExperimentConfig {
        ExperimentConfig {
            dataset: DatasetConfig::Synthetic {
                p: 8,
                k: 4,
                generator: SyntheticKind::GaussianLinear,
                test_size: 16,
            },
            learner: LearnerConfig::Orfit {
                memory: MemoryPolicy::Unbounded,
            },
            seeds: vec![1, 2],
            tracked_sample_index: Some(2),
            init_scale: 0.01,
            data_seed: 0,
            model: None,
            output: None,
            record_timing: false,
        }
    }

    #[test]
    fn round_trips_through_json() {
        let cfg = minimal_synthetic();
        let text = serde_json::to_string_pretty(&cfg).unwrap();
        let back: ExperimentConfig = serde_json::from_str(&text).unwrap();
        assert_eq!(cfg, back);
    }

    #[test]
    fn defaults_fill_in() {
        let text = r#"{
            "dataset": {"kind": "synthetic", "p": 8, "k": 4, "generator": "gaussian_linear"},
            "learner": {"kind": "orfit"},
            "seeds": [7]
        }"#;
        let cfg: ExperimentConfig = serde_json::from_str(text).unwrap();
        cfg.validate().unwrap();
        assert_eq!(cfg.init_scale, 0.01);
        assert_eq!(
            cfg.learner,
            LearnerConfig::Orfit {
                memory: MemoryPolicy::Unbounded
            }
        );
        assert_eq!(cfg.tracked_sample_index, None);
        assert!(!cfg.record_timing);
        assert_eq!(cfg.resolved_model(), ModelSpec::linear(8));
    }

    #[test]
    fn rejects_bad_values() {
        let mut cfg = minimal_synthetic();
        cfg.seeds.clear();
        assert!(cfg.validate().is_err());

        let mut cfg = minimal_synthetic();
        cfg.init_scale = 0.0;
        assert!(cfg.validate().is_err());

        let mut cfg = minimal_synthetic();
        cfg.tracked_sample_index = Some(0);
        assert!(cfg.validate().is_err());

        let mut cfg = minimal_synthetic();
        cfg.tracked_sample_index = Some(5);
        assert!(cfg.validate().is_err());

        let mut cfg = minimal_synthetic();
        cfg.dataset = DatasetConfig::Synthetic {
            p: 4,
            k: 8,
            generator: SyntheticKind::GaussianLinear,
            test_size: 16,
        };
        assert!(cfg.validate().is_err());

        let mut cfg = minimal_synthetic();
        cfg.learner = LearnerConfig::Ewrls { lambda: 1.5 };
        assert!(cfg.validate().is_err());

        // A nonlinear model under the raw-feature recursion.
        let mut cfg = minimal_synthetic();
        cfg.learner = LearnerConfig::Ewrls { lambda: 1.0 };
        cfg.model = Some(ModelSpec::mlp(8, vec![4]));
        assert!(cfg.validate().is_err());

        // Model input dimension must match the dataset.
        let mut cfg = minimal_synthetic();
        cfg.model = Some(ModelSpec::linear(9));
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn file_errors_are_distinguished() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cfg.json");
        // Missing file: I/O (ingestion, exit 3).
        let err = ExperimentConfig::from_json_file(&path).unwrap_err();
        assert_eq!(err.exit_code(), 3);
        // Malformed JSON: configuration (exit 2).
        std::fs::write(&path, "{ not json").unwrap();
        let err = ExperimentConfig::from_json_file(&path).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        // Unknown field: configuration.
        std::fs::write(
            &path,
            r#"{"dataset": {"kind":"synthetic","p":8,"k":4,"generator":"gaussian_linear"},
                "learner": {"kind":"orfit"}, "seeds":[1], "bogus": true}"#,
        )
        .unwrap();
        let err = ExperimentConfig::from_json_file(&path).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        // Valid file parses.
        std::fs::write(
            &path,
            r#"{"dataset": {"kind":"synthetic","p":8,"k":4,"generator":"gaussian_linear"},
                "learner": {"kind":"orfit"}, "seeds":[1]}"#,
        )
        .unwrap();
        ExperimentConfig::from_json_file(&path).unwrap();
    }

    #[test]
    fn baseline_learner_nests_its_own_config() {
        let text = r#"{
            "dataset": {"kind": "synthetic", "p": 8, "k": 4, "generator": "gaussian_linear"},
            "learner": {"kind": "baseline",
                        "baseline": {"kind": "sgd_multipass", "step_size": 1e-5, "epochs": 10}},
            "seeds": [1]
        }"#;
        let cfg: ExperimentConfig = serde_json::from_str(text).unwrap();
        cfg.validate().unwrap();
        assert!(matches!(
            cfg.learner,
            LearnerConfig::Baseline {
                baseline: BaselineConfig::SgdMultipass { .. }
            }
        ));
    }
}
