//! Seeded experiment runs: stream the data through the configured
//! learner and record error metrics after every step.

use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::baselines::{ogd_step, sgd_multipass_with_hook, BaselineConfig, GreedyState};
use crate::error::{Error, Result};
use crate::harness::config::{DatasetConfig, ExperimentConfig, LearnerConfig};
use crate::learner::{MemoryPolicy, OrfitState};
use crate::linalg::DenseVector;
use crate::model::{LossSpec, ModelSpec};
use crate::rls::RlsState;
use crate::stream::{
    build_rotated_mnist_stream, gaussian_linear_with_teacher, gaussian_mlp_with_teacher,
    teacher_labeled_samples, MnistPaths, StreamSample, SyntheticKind,
};

/// Offset mixed into the data seed for held-out synthetic test draws,
/// so train and test never share generator state.
const TEST_SPLIT_SALT: u64 = 0x9E37_79B9_7F4A_7C15;

/// One metrics record: errors measured right after step `step` (1-based;
/// for multi-pass learners a step is one epoch).
#[derive(Debug, Clone)]
pub struct MetricsRow {
    pub seed: u64,
    pub step: usize,
    /// RMSE over all training samples seen so far (the full training
    /// set for multi-pass learners).
    pub train_error: f64,
    /// RMSE over the held-out test split.
    pub test_error: f64,
    /// Absolute prediction error on the tracked sample; NaN when no
    /// sample is tracked.
    pub tracked_pred_error: f64,
    /// Wall time of the learning step in microseconds; 0 unless timing
    /// was requested.
    pub wall_micros: u64,
}

impl PartialEq for MetricsRow {
    fn eq(&self, other: &Self) -> bool {
        self.seed == other.seed
            && self.step == other.step
            && self.train_error.total_cmp(&other.train_error).is_eq()
            && self.test_error.total_cmp(&other.test_error).is_eq()
            && self
                .tracked_pred_error
                .total_cmp(&other.tracked_pred_error)
                .is_eq()
            && self.wall_micros == other.wall_micros
    }
}

/// A seed whose run aborted mid-stream, with the step that failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedFailure {
    pub seed: u64,
    pub step: usize,
    pub message: String,
}

/// All rows from all seeds, plus any per-seed failures. Failed seeds
/// keep the rows they produced before failing.
#[derive(Debug, Clone, Default)]
pub struct RunReport {
    pub rows: Vec<MetricsRow>,
    pub failures: Vec<SeedFailure>,
}

impl RunReport {
    /// The last recorded row of each seed, in first-appearance order.
    pub fn final_rows(&self) -> Vec<&MetricsRow> {
        let mut out: Vec<&MetricsRow> = Vec::new();
        for row in &self.rows {
            match out.iter_mut().find(|r| r.seed == row.seed) {
                Some(slot) => *slot = row,
                None => out.push(row),
            }
        }
        out
    }

    /// Mean of a metric over the final row of every seed.
    pub fn mean_final(&self, metric: impl Fn(&MetricsRow) -> f64) -> f64 {
        let finals = self.final_rows();
        if finals.is_empty() {
            return f64::NAN;
        }
        finals.iter().map(|r| metric(r)).sum::<f64>() / finals.len() as f64
    }
}

/// Root-mean-square of prediction errors over `samples` under `predict`.
fn rmse(
    samples: &[StreamSample],
    mut predict: impl FnMut(&StreamSample) -> Result<f64>,
) -> Result<f64> {
    if samples.is_empty() {
        return Ok(0.0);
    }
    let mut sum_sq = 0.0;
    for s in samples {
        let e = predict(s)? - s.y;
        sum_sq += e * e;
    }
    Ok((sum_sq / samples.len() as f64).sqrt())
}

/// The train and test splits an experiment runs on.
pub struct ExperimentData {
    pub train: Vec<StreamSample>,
    pub test: Vec<StreamSample>,
}

/// Materializes the dataset named by the configuration. Rotated-digit
/// streams require the four IDX files on disk; the error message names
/// the first missing file and the command that downloads it.
pub fn build_experiment_data(cfg: &ExperimentConfig) -> Result<ExperimentData> {
    match &cfg.dataset {
        DatasetConfig::RotatedMnist { dir, k } => {
            let paths = MnistPaths::in_dir(dir);
            if let Some(missing) = paths.first_missing() {
                return Err(Error::Io(std::io::Error::new(
                    std::io::ErrorKind::NotFound,
                    format!(
                        "data file {} not found; download the archives with \
                         `orfit fetch-data --dir {}` or point the dataset dir at an \
                         existing download",
                        missing.display(),
                        dir.display()
                    ),
                )));
            }
            let (train, test) = build_rotated_mnist_stream(&paths, *k, cfg.data_seed)?;
            Ok(ExperimentData { train, test })
        }
        DatasetConfig::Synthetic {
            p,
            k,
            generator,
            test_size,
        } => {
            let test_seed = cfg.data_seed.wrapping_add(TEST_SPLIT_SALT);
            let (train, teacher, theta) = match generator {
                SyntheticKind::GaussianLinear => {
                    let (train, w_star) = gaussian_linear_with_teacher(*p, *k, cfg.data_seed)?;
                    (train, ModelSpec::linear(*p), w_star)
                }
                SyntheticKind::GaussianMlp => gaussian_mlp_with_teacher(*p, *k, cfg.data_seed)?,
            };
            let test = teacher_labeled_samples(&teacher, &theta, *test_size, test_seed)?;
            Ok(ExperimentData { train, test })
        }
    }
}

// One instance lives per seed run; the size spread between variants
// doesn't matter and boxing would only add indirection.
#[allow(clippy::large_enum_variant)]
enum ActiveLearner {
    Orfit(OrfitState),
    Rls {
        state: RlsState,
        linearized: bool,
    },
    Greedy(GreedyState),
    Ogd {
        slot: Option<(DenseVector, Vec<DenseVector>)>,
        cfg: BaselineConfig,
    },
}

impl ActiveLearner {
    fn step(&mut self, model: &ModelSpec, loss: &LossSpec, sample: &StreamSample) -> Result<()> {
        match self {
            ActiveLearner::Orfit(state) => {
                state.step(model, loss, sample)?;
            }
            ActiveLearner::Rls { state, linearized } => {
                if *linearized {
                    state.ntkrls_step(model, &sample.x, sample.y)?;
                } else {
                    state.ewrls_step(&sample.x, sample.y)?;
                }
            }
            ActiveLearner::Greedy(state) => state.observe(sample),
            ActiveLearner::Ogd { slot, cfg } => {
                let (w, basis) = slot.take().expect("ogd state present");
                *slot = Some(ogd_step(w, basis, model, loss, sample, cfg)?);
            }
        }
        Ok(())
    }

    fn predict(&self, model: &ModelSpec, x: &DenseVector) -> Result<f64> {
        match self {
            ActiveLearner::Orfit(state) => model.predict(state.parameters(), x),
            ActiveLearner::Rls { state, .. } => model.predict(state.parameters(), x),
            ActiveLearner::Greedy(state) => state.predict(x),
            ActiveLearner::Ogd { slot, .. } => {
                let (w, _) = slot.as_ref().expect("ogd state present");
                model.predict(w, x)
            }
        }
    }
}

fn draw_initialization(model: &ModelSpec, seed: u64, scale: f64) -> DenseVector {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    DenseVector::from_fn(model.param_dim(), |_| {
        let z: f64 = rng.sample(StandardNormal);
        z * scale
    })
}

/// Runs the experiment: every seed draws its own initialization, streams
/// the training data once through the configured learner (or runs the
/// multi-pass baseline), and records errors after each step. A seed that
/// fails mid-stream is recorded in `failures` and the remaining seeds
/// still run.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<RunReport> {
    cfg.validate()?;
    let data = build_experiment_data(cfg)?;
    run_experiment_on(cfg, &data)
}

/// [`run_experiment`] against already materialized data; useful when
/// several learner configurations share one dataset.
pub fn run_experiment_on(cfg: &ExperimentConfig, data: &ExperimentData) -> Result<RunReport> {
    cfg.validate()?;
    let model = cfg.resolved_model();
    let loss = LossSpec::Squared;
    let tracked: Option<&StreamSample> = cfg
        .tracked_sample_index
        .map(|t| {
            data.train.get(t - 1).ok_or_else(|| {
                Error::Configuration(format!(
                    "tracked_sample_index {t} exceeds the materialized stream length {}",
                    data.train.len()
                ))
            })
        })
        .transpose()?;
    let mut report = RunReport::default();
    for &seed in &cfg.seeds {
        let w0 = draw_initialization(&model, seed, cfg.init_scale);
        let outcome = match &cfg.learner {
            LearnerConfig::Baseline {
                baseline: baseline @ BaselineConfig::SgdMultipass { .. },
            } => run_multipass_seed(
                cfg,
                data,
                &model,
                &loss,
                baseline,
                w0,
                seed,
                tracked,
                &mut report,
            ),
            _ => run_streaming_seed(cfg, data, &model, &loss, w0, seed, tracked, &mut report),
        };
        if let Err(e) = outcome {
            match e {
                Error::InconsistentStream { step, .. } => report.failures.push(SeedFailure {
                    seed,
                    step,
                    message: e.to_string(),
                }),
                Error::Divergence { .. } | Error::NumericalFailure(_) => {
                    let step = report
                        .rows
                        .iter()
                        .rev()
                        .find(|r| r.seed == seed)
                        .map_or(0, |r| r.step);
                    report.failures.push(SeedFailure {
                        seed,
                        step,
                        message: e.to_string(),
                    });
                }
                other => return Err(other),
            }
        }
    }
    Ok(report)
}

#[allow(clippy::too_many_arguments)]
fn run_streaming_seed(
    cfg: &ExperimentConfig,
    data: &ExperimentData,
    model: &ModelSpec,
    loss: &LossSpec,
    w0: DenseVector,
    seed: u64,
    tracked: Option<&StreamSample>,
    report: &mut RunReport,
) -> Result<()> {
    let mut learner = match &cfg.learner {
        LearnerConfig::Orfit { memory } => {
            ActiveLearner::Orfit(OrfitState::new(w0, memory.clone())?)
        }
        LearnerConfig::Ewrls { lambda } => ActiveLearner::Rls {
            state: RlsState::new(w0, *lambda)?,
            linearized: false,
        },
        LearnerConfig::Ntkrls { lambda } => ActiveLearner::Rls {
            state: RlsState::new(w0, *lambda)?,
            linearized: true,
        },
        LearnerConfig::Baseline { baseline } => match baseline {
            BaselineConfig::Greedy => ActiveLearner::Greedy(GreedyState::new()),
            BaselineConfig::OneStepSgd => {
                // The exact-fit step without memory IS the one-pass
                // learner with memory disabled; same code path.
                ActiveLearner::Orfit(OrfitState::new(w0, MemoryPolicy::None)?)
            }
            BaselineConfig::Ogd { .. } => ActiveLearner::Ogd {
                slot: Some((w0, Vec::new())),
                cfg: baseline.clone(),
            },
            BaselineConfig::SgdMultipass { .. } => {
                unreachable!("multi-pass runs take the epoch loop")
            }
        },
    };
    for (i, sample) in data.train.iter().enumerate() {
        let step = i + 1;
        let started = Instant::now();
        learner.step(model, loss, sample)?;
        let wall_micros = if cfg.record_timing {
            started.elapsed().as_micros() as u64
        } else {
            0
        };
        let seen = &data.train[..step];
        let train_error = rmse(seen, |s| learner.predict(model, &s.x))?;
        let test_error = rmse(&data.test, |s| learner.predict(model, &s.x))?;
        let tracked_pred_error = match tracked {
            Some(t) => (learner.predict(model, &t.x)? - t.y).abs(),
            None => f64::NAN,
        };
        report.rows.push(MetricsRow {
            seed,
            step,
            train_error,
            test_error,
            tracked_pred_error,
            wall_micros,
        });
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn run_multipass_seed(
    cfg: &ExperimentConfig,
    data: &ExperimentData,
    model: &ModelSpec,
    loss: &LossSpec,
    baseline: &BaselineConfig,
    w0: DenseVector,
    seed: u64,
    tracked: Option<&StreamSample>,
    report: &mut RunReport,
) -> Result<()> {
    // Each seed reshuffles differently: the per-run shuffle stream mixes
    // the configured shuffle seed with the run seed.
    let per_seed = match baseline {
        BaselineConfig::SgdMultipass {
            step_size,
            epochs,
            shuffle_seed,
        } => BaselineConfig::SgdMultipass {
            step_size: *step_size,
            epochs: *epochs,
            shuffle_seed: shuffle_seed.wrapping_add(seed),
        },
        _ => unreachable!("caller matched sgd_multipass"),
    };
    let mut last = Instant::now();
    sgd_multipass_with_hook(&data.train, model, loss, &per_seed, &w0, |epoch, w| {
        let wall_micros = if cfg.record_timing {
            last.elapsed().as_micros() as u64
        } else {
            0
        };
        let train_error = rmse(&data.train, |s| model.predict(w, &s.x))?;
        let test_error = rmse(&data.test, |s| model.predict(w, &s.x))?;
        let tracked_pred_error = match tracked {
            Some(t) => (model.predict(w, &t.x)? - t.y).abs(),
            None => f64::NAN,
        };
        report.rows.push(MetricsRow {
            seed,
            step: epoch,
            train_error,
            test_error,
            tracked_pred_error,
            wall_micros,
        });
        last = Instant::now();
        Ok(())
    })?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::config::DatasetConfig;

    fn synthetic_cfg(learner: LearnerConfig) -> ExperimentConfig {
        ExperimentConfig {
            dataset: DatasetConfig::Synthetic {
                p: 24,
                k: 12,
                generator: SyntheticKind::GaussianLinear,
                test_size: 32,
            },
            learner,
            seeds: vec![1, 2, 3],
            tracked_sample_index: Some(4),
            init_scale: 0.01,
            data_seed: 11,
            model: None,
            output: None,
            record_timing: false,
        }
    }

    #[test]
    fn interpolating_learner_drives_train_error_to_zero() {
        let cfg = synthetic_cfg(LearnerConfig::Orfit {
            memory: MemoryPolicy::Unbounded,
        });
        let report = run_experiment(&cfg).unwrap();
        assert!(report.failures.is_empty());
        assert_eq!(report.rows.len(), 3 * 12);
        for row in &report.rows {
            assert!(
                row.train_error <= 1e-8,
                "seed {} step {}: train error {}",
                row.seed,
                row.step,
                row.train_error
            );
            assert_eq!(row.wall_micros, 0);
        }
        // Tracked error collapses once the sample is learned (step 4+).
        for row in report.rows.iter().filter(|r| r.step >= 4) {
            assert!(row.tracked_pred_error <= 1e-8);
        }
    }

    #[test]
    fn greedy_tracked_error_is_label_distance() {
        let cfg = synthetic_cfg(LearnerConfig::Baseline {
            baseline: BaselineConfig::Greedy,
        });
        let data = build_experiment_data(&cfg).unwrap();
        let report = run_experiment_on(&cfg, &data).unwrap();
        let tracked_y = data.train[3].y;
        for row in &report.rows {
            let last_y = data.train[row.step - 1].y;
            let expected = (tracked_y - last_y).abs();
            assert!((row.tracked_pred_error - expected).abs() <= 1e-12);
        }
    }

    #[test]
    fn identical_configs_produce_identical_reports() {
        let cfg = synthetic_cfg(LearnerConfig::Orfit {
            memory: MemoryPolicy::Ipca { m: 4 },
        });
        let a = run_experiment(&cfg).unwrap();
        let b = run_experiment(&cfg).unwrap();
        assert_eq!(a.rows, b.rows);
    }

    #[test]
    fn multipass_rows_step_by_epoch() {
        let mut cfg = synthetic_cfg(LearnerConfig::Baseline {
            baseline: BaselineConfig::SgdMultipass {
                step_size: 1e-3,
                epochs: 5,
                shuffle_seed: 0,
            },
        });
        cfg.seeds = vec![1];
        let report = run_experiment(&cfg).unwrap();
        assert_eq!(
            report.rows.iter().map(|r| r.step).collect::<Vec<_>>(),
            vec![1, 2, 3, 4, 5]
        );
        // Training error decreases over epochs.
        assert!(report.rows.last().unwrap().train_error < report.rows[0].train_error);
    }

    #[test]
    fn inconsistent_stream_is_recorded_not_fatal() {
        // A contradictory duplicate: same input, different target.
        let x = DenseVector::new(vec![1.0, 0.0]).unwrap();
        let data = ExperimentData {
            train: vec![
                StreamSample::new(x.clone(), 1.0, 0),
                StreamSample::new(x.clone(), 2.0, 1),
            ],
            test: vec![StreamSample::new(x, 1.0, 0)],
        };
        let cfg = ExperimentConfig {
            dataset: DatasetConfig::Synthetic {
                p: 2,
                k: 2,
                generator: SyntheticKind::GaussianLinear,
                test_size: 1,
            },
            learner: LearnerConfig::Orfit {
                memory: MemoryPolicy::Unbounded,
            },
            seeds: vec![5, 6],
            tracked_sample_index: None,
            init_scale: 1e-9,
            data_seed: 0,
            model: None,
            output: None,
            record_timing: false,
        };
        let report = run_experiment_on(&cfg, &data).unwrap();
        // Both seeds fail at step 2 but keep their step-1 row.
        assert_eq!(report.failures.len(), 2);
        assert!(report.failures.iter().all(|f| f.step == 2));
        assert_eq!(report.rows.len(), 2);
        assert!(report.rows.iter().all(|r| r.step == 1));
        assert!(report.rows.iter().all(|r| r.tracked_pred_error.is_nan()));
    }

    #[test]
    fn final_rows_and_means() {
        let report = RunReport {
            rows: vec![
                MetricsRow {
                    seed: 1,
                    step: 1,
                    train_error: 0.5,
                    test_error: 1.0,
                    tracked_pred_error: 0.1,
                    wall_micros: 0,
                },
                MetricsRow {
                    seed: 1,
                    step: 2,
                    train_error: 0.25,
                    test_error: 0.8,
                    tracked_pred_error: 0.05,
                    wall_micros: 0,
                },
                MetricsRow {
                    seed: 2,
                    step: 1,
                    train_error: 0.6,
                    test_error: 1.2,
                    tracked_pred_error: 0.2,
                    wall_micros: 0,
                },
            ],
            failures: vec![],
        };
        let finals = report.final_rows();
        assert_eq!(finals.len(), 2);
        assert_eq!(finals[0].step, 2);
        assert_eq!(finals[1].step, 1);
        let mean_test = report.mean_final(|r| r.test_error);
        assert!((mean_test - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn recursion_learners_also_run() {
        for learner in [
            LearnerConfig::Ewrls { lambda: 0.0 },
            LearnerConfig::Ntkrls { lambda: 0.0 },
        ] {
            let mut cfg = synthetic_cfg(learner);
            cfg.seeds = vec![9];
            let report = run_experiment(&cfg).unwrap();
            assert!(report.failures.is_empty());
            let last = report.rows.last().unwrap();
            assert!(last.train_error <= 1e-8, "train error {}", last.train_error);
        }
    }
}
