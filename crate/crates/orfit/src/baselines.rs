//! Comparison learners: greedy recall, one-step gradient fitting without
//! a protective basis, orthogonally projected gradient descent, and
//! multi-pass stochastic gradient descent.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::learner::{MemoryPolicy, OrfitState};
use crate::linalg::{gram_schmidt_append, project_onto_complement, DenseVector, GS_DEFAULT_TOL};
use crate::model::{LossSpec, ModelSpec};
use crate::stream::StreamSample;

/// Parameter norm beyond which multi-pass SGD is declared divergent.
pub const DIVERGENCE_NORM: f64 = 1e12;

fn default_ogd_step() -> f64 {
    0.1
}

fn default_ogd_inner() -> usize {
    10
}

/// Which baseline to run and its hyperparameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum BaselineConfig {
    /// Predicts the most recently seen target, ignoring the input.
    Greedy,
    /// Exact-fit step on each sample with no basis protection.
    OneStepSgd,
    /// Fixed-step descent on each sample with gradients projected off a
    /// stored basis; the basis grows by the gradient at the updated
    /// parameters.
    Ogd {
        #[serde(default = "default_ogd_step")]
        step_size: f64,
        #[serde(default = "default_ogd_inner")]
        inner_iters: usize,
    },
    /// Plain SGD, several passes over the whole set, reshuffled each
    /// epoch by a seeded generator.
    SgdMultipass {
        step_size: f64,
        epochs: usize,
        #[serde(default)]
        shuffle_seed: u64,
    },
}

impl BaselineConfig {
    pub fn validate(&self) -> Result<()> {
        match self {
            BaselineConfig::Greedy | BaselineConfig::OneStepSgd => Ok(()),
            BaselineConfig::Ogd {
                step_size,
                inner_iters,
            } => {
                if !(step_size.is_finite() && *step_size > 0.0) {
                    return Err(Error::Configuration(format!(
                        "ogd step size must be positive and finite, got {step_size}"
                    )));
                }
                if *inner_iters == 0 {
                    return Err(Error::Configuration(
                        "ogd needs at least one inner iteration".into(),
                    ));
                }
                Ok(())
            }
            BaselineConfig::SgdMultipass { step_size, .. } => {
                if !(step_size.is_finite() && *step_size > 0.0) {
                    return Err(Error::Configuration(format!(
                        "sgd step size must be positive and finite, got {step_size}"
                    )));
                }
                Ok(())
            }
        }
    }
}

/// Remembers only the most recent target.
#[derive(Debug, Clone, Default)]
pub struct GreedyState {
    last: Option<f64>,
}

impl GreedyState {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn observe(&mut self, sample: &StreamSample) {
        self.last = Some(sample.y);
    }

    pub fn predict(&self, _x: &DenseVector) -> Result<f64> {
        self.last.ok_or_else(|| {
            Error::ContractViolation("greedy learner asked to predict before any sample".into())
        })
    }
}

/// The greedy rule as a pure function: the stored label wins, whatever
/// the input.
pub fn greedy_predict(last_label: f64, _x: &DenseVector) -> f64 {
    last_label
}

/// One exact-fit gradient step with no basis: interpolates the current
/// sample (linear model) but protects nothing that came before. This is
/// the one-pass learner with memory disabled, computed by the identical
/// code path.
pub fn one_step_sgd_step(
    w: DenseVector,
    model: &ModelSpec,
    loss: &LossSpec,
    sample: &StreamSample,
) -> Result<DenseVector> {
    let mut state = OrfitState::new(w, MemoryPolicy::None)?;
    state.step(model, loss, sample)?;
    Ok(state.into_parameters())
}

/// `inner_iters` fixed-step descent updates on the single sample, each
/// loss gradient projected onto the orthogonal complement of `basis`;
/// afterwards the model-output gradient at the final parameters is
/// appended to the basis (orthogonalized, dropped when already spanned).
pub fn ogd_step(
    mut w: DenseVector,
    mut basis: Vec<DenseVector>,
    model: &ModelSpec,
    loss: &LossSpec,
    sample: &StreamSample,
    cfg: &BaselineConfig,
) -> Result<(DenseVector, Vec<DenseVector>)> {
    cfg.validate()?;
    let (step_size, inner_iters) = match cfg {
        BaselineConfig::Ogd {
            step_size,
            inner_iters,
        } => (*step_size, *inner_iters),
        other => {
            return Err(Error::Configuration(format!(
                "ogd_step requires an ogd config, got {other:?}"
            )))
        }
    };
    for _ in 0..inner_iters {
        let (f, grad) = model.value_and_gradient(&w, &sample.x)?;
        let g = grad.scaled(loss.dloss(sample.y, f));
        let g_tilde = project_onto_complement(&g, &basis)?;
        w.add_scaled(-step_size, &g_tilde);
    }
    let (_, grad_final) = model.value_and_gradient(&w, &sample.x)?;
    if let Some(direction) = gram_schmidt_append(&basis, &grad_final, GS_DEFAULT_TOL)? {
        basis.push(direction);
    }
    Ok((w, basis))
}

/// Outcome of a multi-pass SGD run.
#[derive(Debug, Clone)]
pub struct SgdRun {
    pub w: DenseVector,
    /// Per-sample updates applied.
    pub updates: usize,
    /// Norm of the full-objective gradient at the final parameters.
    pub grad_norm: f64,
    /// Whether the gradient-norm target was reached (always false when
    /// no target was set).
    pub converged: bool,
}

/// Multiple shuffled passes of plain SGD; returns the final parameters.
/// Zero epochs leave `w0` untouched.
pub fn sgd_multipass(
    dataset: &[StreamSample],
    model: &ModelSpec,
    loss: &LossSpec,
    cfg: &BaselineConfig,
    w0: &DenseVector,
) -> Result<DenseVector> {
    sgd_multipass_with_hook(dataset, model, loss, cfg, w0, |_, _| Ok(()))
}

/// Like [`sgd_multipass`], invoking `hook(epoch_index, w)` after each
/// completed epoch (1-based epoch index).
pub fn sgd_multipass_with_hook(
    dataset: &[StreamSample],
    model: &ModelSpec,
    loss: &LossSpec,
    cfg: &BaselineConfig,
    w0: &DenseVector,
    mut hook: impl FnMut(usize, &DenseVector) -> Result<()>,
) -> Result<DenseVector> {
    cfg.validate()?;
    let (step_size, epochs, shuffle_seed) = match cfg {
        BaselineConfig::SgdMultipass {
            step_size,
            epochs,
            shuffle_seed,
        } => (*step_size, *epochs, *shuffle_seed),
        other => {
            return Err(Error::Configuration(format!(
                "sgd_multipass requires an sgd_multipass config, got {other:?}"
            )))
        }
    };
    let mut w = w0.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(shuffle_seed);
    let mut order: Vec<usize> = (0..dataset.len()).collect();
    for epoch in 1..=epochs {
        order.shuffle(&mut rng);
        for &idx in &order {
            let sample = &dataset[idx];
            let (f, grad) = model.value_and_gradient(&w, &sample.x)?;
            w.add_scaled(-step_size * loss.dloss(sample.y, f), &grad);
        }
        let norm = w.norm();
        if norm > DIVERGENCE_NORM {
            return Err(Error::Divergence {
                norm,
                limit: DIVERGENCE_NORM,
            });
        }
        hook(epoch, &w)?;
    }
    Ok(w)
}

/// Shuffled-pass SGD run until the full-objective gradient norm drops
/// below `grad_tol`, capped at `max_updates` per-sample updates.
#[allow(clippy::too_many_arguments)]
pub fn sgd_run_to_convergence(
    dataset: &[StreamSample],
    model: &ModelSpec,
    loss: &LossSpec,
    step_size: f64,
    shuffle_seed: u64,
    grad_tol: f64,
    max_updates: usize,
    w0: &DenseVector,
) -> Result<SgdRun> {
    if !(step_size.is_finite() && step_size > 0.0) {
        return Err(Error::Configuration(format!(
            "sgd step size must be positive and finite, got {step_size}"
        )));
    }
    if dataset.is_empty() {
        return Ok(SgdRun {
            w: w0.clone(),
            updates: 0,
            grad_norm: 0.0,
            converged: true,
        });
    }
    let mut w = w0.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(shuffle_seed);
    let mut order: Vec<usize> = (0..dataset.len()).collect();
    let mut updates = 0usize;
    loop {
        order.shuffle(&mut rng);
        for &idx in &order {
            if updates >= max_updates {
                break;
            }
            let sample = &dataset[idx];
            let (f, grad) = model.value_and_gradient(&w, &sample.x)?;
            w.add_scaled(-step_size * loss.dloss(sample.y, f), &grad);
            updates += 1;
        }
        let norm = w.norm();
        if norm > DIVERGENCE_NORM {
            return Err(Error::Divergence {
                norm,
                limit: DIVERGENCE_NORM,
            });
        }
        let grad_norm = full_gradient_norm(dataset, model, loss, &w)?;
        if grad_norm < grad_tol {
            return Ok(SgdRun {
                w,
                updates,
                grad_norm,
                converged: true,
            });
        }
        if updates >= max_updates {
            return Ok(SgdRun {
                w,
                updates,
                grad_norm,
                converged: false,
            });
        }
    }
}

/// Norm of the summed per-sample loss gradients at `w`.
pub fn full_gradient_norm(
    dataset: &[StreamSample],
    model: &ModelSpec,
    loss: &LossSpec,
    w: &DenseVector,
) -> Result<f64> {
    let mut total = DenseVector::zeros(w.len());
    for sample in dataset {
        let (f, grad) = model.value_and_gradient(w, &sample.x)?;
        total.add_scaled(loss.dloss(sample.y, f), &grad);
    }
    Ok(total.norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rls::min_norm_oracle;
    use rand::Rng;

    fn v(entries: &[f64]) -> DenseVector {
        DenseVector::new(entries.to_vec()).unwrap()
    }

    fn sample(x: &[f64], y: f64, index: usize) -> StreamSample {
        StreamSample::new(v(x), y, index)
    }

    #[test]
    fn greedy_returns_the_last_label_for_any_input() {
        assert_eq!(greedy_predict(0.7, &v(&[1.0, 2.0])), 0.7);
        assert_eq!(greedy_predict(0.7, &v(&[-3.0])), 0.7);
        let mut st = GreedyState::new();
        assert!(st.predict(&v(&[1.0])).is_err());
        st.observe(&sample(&[0.0, 1.0], 1.5, 0));
        st.observe(&sample(&[2.0, 0.0], std::f64::consts::PI, 1));
        assert_eq!(st.predict(&v(&[9.0, 9.0])).unwrap(), std::f64::consts::PI);
        assert_eq!(st.predict(&v(&[-1.0, 4.0])).unwrap(), std::f64::consts::PI);
    }

    #[test]
    fn one_step_sgd_first_step_and_forgetting() {
        let model = ModelSpec::linear(2);
        let loss = LossSpec::Squared;
        let w = one_step_sgd_step(
            DenseVector::zeros(2),
            &model,
            &loss,
            &sample(&[1.0, 0.0], 2.0, 0),
        )
        .unwrap();
        assert_eq!(w.as_slice(), &[2.0, 0.0]);
        // Second sample drags the first prediction off target.
        let w = one_step_sgd_step(w, &model, &loss, &sample(&[1.0, 1.0], 3.0, 1)).unwrap();
        assert_eq!(w.as_slice(), &[2.5, 0.5]);
        let drifted = model.predict(&w, &v(&[1.0, 0.0])).unwrap();
        assert_eq!(drifted, 2.5);
        // A consistent duplicate is a no-op.
        let w2 = one_step_sgd_step(w.clone(), &model, &loss, &sample(&[1.0, 1.0], 3.0, 2)).unwrap();
        assert_eq!(w, w2);
    }

    #[test]
    fn one_step_sgd_coincides_with_the_protected_learner_on_the_first_sample() {
        let model = ModelSpec::linear(3);
        let loss = LossSpec::Squared;
        let s = sample(&[0.3, -1.2, 0.4], 1.7, 0);
        let via_baseline = one_step_sgd_step(DenseVector::zeros(3), &model, &loss, &s).unwrap();
        let mut full = OrfitState::new(DenseVector::zeros(3), MemoryPolicy::Unbounded).unwrap();
        full.step(&model, &loss, &s).unwrap();
        assert_eq!(&via_baseline, full.parameters());
    }

    #[test]
    fn repeated_exact_steps_differ_from_the_protected_learner() {
        // Guard against conflating the two schemes: on a two-sample
        // stream the unprotected exact step lands at (2.5, 0.5) while
        // the basis-protected learner lands at (2, 1).
        let model = ModelSpec::linear(2);
        let loss = LossSpec::Squared;
        let s1 = sample(&[1.0, 0.0], 2.0, 0);
        let s2 = sample(&[1.0, 1.0], 3.0, 1);
        let mut unprotected = DenseVector::zeros(2);
        for s in [&s1, &s2] {
            unprotected = one_step_sgd_step(unprotected, &model, &loss, s).unwrap();
        }
        let mut protected =
            OrfitState::new(DenseVector::zeros(2), MemoryPolicy::Unbounded).unwrap();
        for s in [&s1, &s2] {
            protected.step(&model, &loss, s).unwrap();
        }
        assert_eq!(unprotected.as_slice(), &[2.5, 0.5]);
        assert_eq!(protected.parameters().as_slice(), &[2.0, 1.0]);
        assert!(unprotected.max_abs_diff(protected.parameters()) > 0.1);
    }

    #[test]
    fn ogd_descends_the_single_sample_geometrically() {
        let model = ModelSpec::linear(2);
        let loss = LossSpec::Squared;
        let cfg = BaselineConfig::Ogd {
            step_size: 0.1,
            inner_iters: 10,
        };
        let (w, basis) = ogd_step(
            DenseVector::zeros(2),
            Vec::new(),
            &model,
            &loss,
            &sample(&[1.0, 0.0], 2.0, 0),
            &cfg,
        )
        .unwrap();
        let expected = 2.0 * (1.0 - 0.9f64.powi(10));
        assert!((w[0] - expected).abs() <= 1e-12);
        assert_eq!(w[1], 0.0);
        assert_eq!(basis.len(), 1);
    }

    #[test]
    fn ogd_inner_steps_preserve_basis_protected_predictions() {
        let model = ModelSpec::linear(2);
        let loss = LossSpec::Squared;
        let cfg = BaselineConfig::Ogd {
            step_size: 0.1,
            inner_iters: 25,
        };
        let w0 = v(&[2.0, 0.0]);
        let protected = v(&[1.0, 0.0]);
        let before = model.predict(&w0, &protected).unwrap();
        let (w, basis) = ogd_step(
            w0,
            vec![protected.clone()],
            &model,
            &loss,
            &sample(&[1.0, 1.0], 3.0, 1),
            &cfg,
        )
        .unwrap();
        let after = model.predict(&w, &protected).unwrap();
        assert!((after - before).abs() <= 1e-10);
        // The new gradient direction was orthogonalized in.
        assert_eq!(basis.len(), 2);
        assert!(basis[1].dot(&protected).abs() <= 1e-10);
    }

    #[test]
    fn ogd_rejects_foreign_configs() {
        let model = ModelSpec::linear(2);
        let loss = LossSpec::Squared;
        let err = ogd_step(
            DenseVector::zeros(2),
            Vec::new(),
            &model,
            &loss,
            &sample(&[1.0, 0.0], 2.0, 0),
            &BaselineConfig::Greedy,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Configuration(_)));
    }

    #[test]
    fn sgd_zero_epochs_returns_the_start_and_one_sample_converges() {
        let model = ModelSpec::linear(2);
        let loss = LossSpec::Squared;
        let data = [sample(&[1.0, 0.0], 2.0, 0)];
        let w0 = v(&[0.5, -0.5]);
        let cfg = BaselineConfig::SgdMultipass {
            step_size: 0.1,
            epochs: 0,
            shuffle_seed: 0,
        };
        assert_eq!(sgd_multipass(&data, &model, &loss, &cfg, &w0).unwrap(), w0);
        let cfg = BaselineConfig::SgdMultipass {
            step_size: 0.1,
            epochs: 300,
            shuffle_seed: 0,
        };
        let w = sgd_multipass(&data, &model, &loss, &cfg, &w0).unwrap();
        assert!((model.predict(&w, &data[0].x).unwrap() - 2.0).abs() <= 1e-6);
    }

    #[test]
    fn sgd_detects_divergence() {
        let model = ModelSpec::linear(1);
        let loss = LossSpec::Squared;
        let data = [sample(&[1.0], 1.0, 0)];
        let cfg = BaselineConfig::SgdMultipass {
            step_size: 3.0,
            epochs: 1000,
            shuffle_seed: 0,
        };
        let err = sgd_multipass(&data, &model, &loss, &cfg, &DenseVector::zeros(1)).unwrap_err();
        assert!(matches!(err, Error::Divergence { .. }));
    }

    #[test]
    fn converged_sgd_lands_on_the_minimum_distance_interpolator() {
        let p = 32;
        let k = 16;
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let model = ModelSpec::linear(p);
        let loss = LossSpec::Squared;
        let data: Vec<StreamSample> = (0..k)
            .map(|i| {
                StreamSample::new(
                    DenseVector::from_fn(p, |_| rng.gen_range(-1.0..1.0)),
                    rng.gen_range(-1.0..1.0),
                    i,
                )
            })
            .collect();
        let w0 = DenseVector::from_fn(p, |_| 0.01 * rng.gen_range(-1.0..1.0));
        let run =
            sgd_run_to_convergence(&data, &model, &loss, 1e-3, 7, 1e-9, 500_000, &w0).unwrap();
        assert!(run.converged, "gradient norm stalled at {}", run.grad_norm);
        let rows: Vec<DenseVector> = data.iter().map(|s| s.x.clone()).collect();
        let ys: Vec<f64> = data.iter().map(|s| s.y).collect();
        let oracle = min_norm_oracle(&rows, &ys, &w0).unwrap();
        let rel = run.w.max_abs_diff(&oracle) / oracle.norm().max(1.0);
        assert!(rel <= 1e-3, "relative gap {rel}");
    }

    #[test]
    fn epoch_hook_sees_every_epoch_in_order() {
        let model = ModelSpec::linear(2);
        let loss = LossSpec::Squared;
        let data = [sample(&[1.0, 0.0], 1.0, 0), sample(&[0.0, 1.0], -1.0, 1)];
        let cfg = BaselineConfig::SgdMultipass {
            step_size: 0.05,
            epochs: 4,
            shuffle_seed: 3,
        };
        let mut seen = Vec::new();
        sgd_multipass_with_hook(
            &data,
            &model,
            &loss,
            &cfg,
            &DenseVector::zeros(2),
            |e, w| {
                seen.push((e, w.clone()));
                Ok(())
            },
        )
        .unwrap();
        assert_eq!(
            seen.iter().map(|(e, _)| *e).collect::<Vec<_>>(),
            vec![1, 2, 3, 4]
        );
    }

    #[test]
    fn config_validation_and_serde_round_trip() {
        let cfg = BaselineConfig::Ogd {
            step_size: 0.1,
            inner_iters: 10,
        };
        cfg.validate().unwrap();
        let text = serde_json::to_string(&cfg).unwrap();
        assert_eq!(serde_json::from_str::<BaselineConfig>(&text).unwrap(), cfg);
        // Defaults fill in.
        let parsed: BaselineConfig = serde_json::from_str(r#"{"kind":"ogd"}"#).unwrap();
        assert_eq!(
            parsed,
            BaselineConfig::Ogd {
                step_size: 0.1,
                inner_iters: 10
            }
        );
        assert!(BaselineConfig::Ogd {
            step_size: -1.0,
            inner_iters: 10
        }
        .validate()
        .is_err());
        assert!(BaselineConfig::Ogd {
            step_size: 0.1,
            inner_iters: 0
        }
        .validate()
        .is_err());
        assert!(BaselineConfig::SgdMultipass {
            step_size: 0.0,
            epochs: 5,
            shuffle_seed: 0
        }
        .validate()
        .is_err());
        let parsed: BaselineConfig =
            serde_json::from_str(r#"{"kind":"sgd_multipass","step_size":1e-5,"epochs":1000}"#)
                .unwrap();
        assert_eq!(
            parsed,
            BaselineConfig::SgdMultipass {
                step_size: 1e-5,
                epochs: 1000,
                shuffle_seed: 0
            }
        );
    }
}
