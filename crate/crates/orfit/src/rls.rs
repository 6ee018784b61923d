//! Exponentially weighted recursive least squares and its linearized
//! extension for nonlinear models, plus direct-solve oracles.
//!
//! The recursion maintains the exact minimizer of the exponentially
//! discounted regularized least-squares objective through a rank-one
//! update of the inverse-Hessian-like matrix `P`. With forgetting factor
//! zero and identity regularizer, `P` degenerates to the orthogonal
//! projector off the span of seen inputs, and the recursion reproduces
//! the one-pass interpolating learner exactly.

use crate::error::{Error, Result};
use crate::learner::{StepOutcome, EPS_DEN, EPS_FIT};
use crate::linalg::{DenseMatrix, DenseVector};
use crate::model::ModelSpec;

/// Recursive least-squares state.
///
/// `P` starts at the inverse of the regularizer and stays symmetric by
/// construction: every rank-one update writes entry (r, c) and (c, r)
/// from the same rounded product.
#[derive(Debug, Clone)]
pub struct RlsState {
    w: DenseVector,
    p_matrix: DenseMatrix,
    lambda: f64,
    regularizer: Option<DenseMatrix>,
    step: usize,
}

impl RlsState {
    /// State with identity regularizer: `P0 = I`.
    pub fn new(w0: DenseVector, lambda: f64) -> Result<Self> {
        check_lambda(lambda)?;
        let p = w0.len();
        Ok(Self {
            w: w0,
            p_matrix: DenseMatrix::identity(p),
            lambda,
            regularizer: None,
            step: 0,
        })
    }

    /// State with an explicit positive-definite regularizer `pi`;
    /// `P0 = pi^{-1}`.
    pub fn with_regularizer(w0: DenseVector, lambda: f64, pi: DenseMatrix) -> Result<Self> {
        check_lambda(lambda)?;
        if pi.rows() != w0.len() || pi.cols() != w0.len() {
            return Err(Error::DimensionMismatch {
                context: "regularizer matrix",
                expected: w0.len(),
                got: pi.rows(),
            });
        }
        let p0 = pi
            .inverse()
            .map_err(|_| Error::NumericalFailure("regularizer matrix is not invertible".into()))?;
        Ok(Self {
            w: w0,
            p_matrix: p0,
            lambda,
            regularizer: Some(pi),
            step: 0,
        })
    }

    pub fn parameters(&self) -> &DenseVector {
        &self.w
    }

    pub fn p_matrix(&self) -> &DenseMatrix {
        &self.p_matrix
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// The regularizer; `None` means identity.
    pub fn regularizer(&self) -> Option<&DenseMatrix> {
        self.regularizer.as_ref()
    }

    pub fn step_count(&self) -> usize {
        self.step
    }

    /// One recursion step on the raw sample `(x, y)` for the linear
    /// model: gain along `P x`, then the rank-one downdate of `P`, both
    /// divided by `lambda^i + x^T P x`.
    pub fn ewrls_step(&mut self, x: &DenseVector, y: f64) -> Result<StepOutcome> {
        if x.len() != self.w.len() {
            return Err(Error::DimensionMismatch {
                context: "ewrls input",
                expected: self.w.len(),
                got: x.len(),
            });
        }
        let residual = y - self.w.dot(x);
        self.rank_one_update(x, residual, y)
    }

    /// One recursion step for a general differentiable model: the sample
    /// is replaced by the gradient direction at the current parameters
    /// and the prediction residual. For the linear model this computes
    /// bit-for-bit the same trajectory as [`ewrls_step`](Self::ewrls_step).
    pub fn ntkrls_step(
        &mut self,
        model: &ModelSpec,
        x: &DenseVector,
        y: f64,
    ) -> Result<StepOutcome> {
        let (f, grad) = model.value_and_gradient(&self.w, x)?;
        let residual = y - f;
        self.rank_one_update(&grad, residual, y)
    }

    fn rank_one_update(
        &mut self,
        direction: &DenseVector,
        residual: f64,
        y_scale: f64,
    ) -> Result<StepOutcome> {
        let i = self.step + 1;
        let lam_pow = self.lambda.powi(i as i32);
        let pg = self.p_matrix.matvec(direction)?;
        let quad = direction.dot(&pg);
        let den = lam_pow + quad;
        if den.abs() <= EPS_DEN * direction.norm() * pg.norm() {
            if self.lambda > 0.0 {
                return Err(Error::NumericalFailure(format!(
                    "rls denominator collapsed at step {i} despite positive forgetting factor"
                )));
            }
            if residual.abs() <= EPS_FIT * (1.0 + y_scale.abs()) {
                self.step = i;
                return Ok(StepOutcome::Skipped);
            }
            return Err(Error::InconsistentStream {
                step: i,
                residual: -residual,
            });
        }
        let gain = residual / den;
        self.w.add_scaled(gain, &pg);
        // (pg_r * pg_c) * inv_den rounds identically to its transpose, so
        // P stays exactly symmetric without a mirroring pass.
        let inv_den = 1.0 / den;
        let pg_slice = pg.as_slice();
        let n = pg_slice.len();
        for r in 0..n {
            let pr = pg_slice[r];
            let row = self.p_matrix.row_slice_mut(r);
            for c in 0..n {
                row[c] -= (pr * pg_slice[c]) * inv_den;
            }
        }
        self.step = i;
        Ok(StepOutcome::Updated { eta: gain })
    }
}

fn check_lambda(lambda: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::Configuration(format!(
            "forgetting factor must lie in [0, 1], got {lambda}"
        )));
    }
    Ok(())
}

/// A sample translated into the linearized stream of a nonlinear model:
/// the gradient at the pre-step parameters and the matching adjusted
/// target `y - f(w) + grad . w`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearizedSample {
    pub grad: DenseVector,
    pub ytilde: f64,
}

impl LinearizedSample {
    /// Linearizes `(x, y)` around `w_prev`.
    pub fn linearize(
        model: &ModelSpec,
        w_prev: &DenseVector,
        x: &DenseVector,
        y: f64,
    ) -> Result<Self> {
        let (f, grad) = model.value_and_gradient(w_prev, x)?;
        let ytilde = y - f + grad.dot(w_prev);
        Ok(Self { grad, ytilde })
    }
}

/// Direct minimizer of the exponentially discounted objective
/// `sum_k lambda^(i-k) (y_k - w.x_k)^2 + lambda^i |w - w0|^2_Pi`
/// by solving the normal equations. Requires a strictly positive
/// forgetting factor; with no samples the regularizer alone gives `w0`.
pub fn closed_form_ewrls(
    xs: &[DenseVector],
    ys: &[f64],
    lambda: f64,
    pi: Option<&DenseMatrix>,
    w0: &DenseVector,
) -> Result<DenseVector> {
    if !(lambda > 0.0 && lambda <= 1.0) {
        return Err(Error::Configuration(format!(
            "closed form needs a forgetting factor in (0, 1], got {lambda}"
        )));
    }
    if xs.len() != ys.len() {
        return Err(Error::DimensionMismatch {
            context: "closed-form targets",
            expected: xs.len(),
            got: ys.len(),
        });
    }
    if xs.is_empty() {
        return Ok(w0.clone());
    }
    let p = w0.len();
    let count = xs.len();
    let lam_i = lambda.powi(count as i32);
    let mut a = match pi {
        Some(m) => {
            if m.rows() != p || m.cols() != p {
                return Err(Error::DimensionMismatch {
                    context: "closed-form regularizer",
                    expected: p,
                    got: m.rows(),
                });
            }
            let mut a = m.clone();
            for r in 0..p {
                for c in 0..p {
                    a.set(r, c, a.get(r, c) * lam_i);
                }
            }
            a
        }
        None => {
            let mut a = DenseMatrix::zeros(p, p);
            for r in 0..p {
                a.set(r, r, lam_i);
            }
            a
        }
    };
    let pi_w0 = match pi {
        Some(m) => m.matvec(w0)?,
        None => w0.clone(),
    };
    let mut b = pi_w0.scaled(lam_i);
    for (k, (x, y)) in xs.iter().zip(ys).enumerate() {
        if x.len() != p {
            return Err(Error::DimensionMismatch {
                context: "closed-form sample",
                expected: p,
                got: x.len(),
            });
        }
        let weight = lambda.powi((count - (k + 1)) as i32);
        for r in 0..p {
            let xr = x[r] * weight;
            for c in 0..p {
                let v = a.get(r, c) + xr * x[c];
                a.set(r, c, v);
            }
        }
        b.add_scaled(weight * y, x);
    }
    a.solve(&b)
        .map_err(|e| Error::NumericalFailure(format!("closed-form solve failed: {e}")))
}

/// Minimum-distance interpolator: `argmin |w - w0|` subject to
/// `rows_k . w = targets_k`, via the Gram system of the constraint rows.
/// The rows must be linearly independent and at most `len(w0)` many.
pub fn min_norm_oracle(
    rows: &[DenseVector],
    targets: &[f64],
    w0: &DenseVector,
) -> Result<DenseVector> {
    if rows.len() != targets.len() {
        return Err(Error::DimensionMismatch {
            context: "min-norm targets",
            expected: rows.len(),
            got: targets.len(),
        });
    }
    if rows.is_empty() {
        return Ok(w0.clone());
    }
    if rows.len() > w0.len() {
        return Err(Error::ContractViolation(format!(
            "{} constraints exceed the {} parameter dimensions",
            rows.len(),
            w0.len()
        )));
    }
    let k = rows.len();
    let mut gram = DenseMatrix::zeros(k, k);
    for i in 0..k {
        if rows[i].len() != w0.len() {
            return Err(Error::DimensionMismatch {
                context: "min-norm constraint row",
                expected: w0.len(),
                got: rows[i].len(),
            });
        }
        for j in i..k {
            let g = rows[i].dot(&rows[j]);
            gram.set(i, j, g);
            gram.set(j, i, g);
        }
    }
    let rhs = DenseVector::from_fn(k, |i| targets[i] - rows[i].dot(w0));
    let alpha = gram.solve(&rhs).map_err(|_| {
        Error::DegenerateSystem("constraint rows are linearly dependent or inconsistent".into())
    })?;
    let mut w = w0.clone();
    for (a, row) in alpha.iter().zip(rows) {
        w.add_scaled(*a, row);
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::learner::{MemoryPolicy, OrfitState};
    use crate::model::LossSpec;
    use crate::stream::StreamSample;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn v(entries: &[f64]) -> DenseVector {
        DenseVector::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn single_step_with_full_memory_of_the_past() {
        let mut state = RlsState::new(DenseVector::zeros(2), 1.0).unwrap();
        state.ewrls_step(&v(&[1.0, 0.0]), 2.0).unwrap();
        assert_eq!(state.parameters().as_slice(), &[1.0, 0.0]);
        let p = state.p_matrix();
        assert_eq!(
            [p.get(0, 0), p.get(0, 1), p.get(1, 0), p.get(1, 1)],
            [0.5, 0.0, 0.0, 1.0]
        );
        // Agrees with the direct solve of (I + x x^T) w = x y.
        let oracle =
            closed_form_ewrls(&[v(&[1.0, 0.0])], &[2.0], 1.0, None, &DenseVector::zeros(2))
                .unwrap();
        assert_eq!(state.parameters(), &oracle);
    }

    #[test]
    fn zero_forgetting_interpolates_and_projects() {
        let mut state = RlsState::new(DenseVector::zeros(2), 0.0).unwrap();
        state.ewrls_step(&v(&[1.0, 0.0]), 2.0).unwrap();
        assert_eq!(state.parameters().as_slice(), &[2.0, 0.0]);
        let p = state.p_matrix();
        assert_eq!(
            [p.get(0, 0), p.get(0, 1), p.get(1, 0), p.get(1, 1)],
            [0.0, 0.0, 0.0, 1.0]
        );
        state.ewrls_step(&v(&[1.0, 1.0]), 3.0).unwrap();
        assert_eq!(state.parameters().as_slice(), &[2.0, 1.0]);
    }

    #[test]
    fn matches_the_one_pass_learner_trajectory_at_zero_lambda() {
        let p = 16;
        let k = 8;
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let model = ModelSpec::linear(p);
        let loss = LossSpec::Squared;
        let mut orfit = OrfitState::new(DenseVector::zeros(p), MemoryPolicy::Unbounded).unwrap();
        let mut rls = RlsState::new(DenseVector::zeros(p), 0.0).unwrap();
        for i in 0..k {
            let x = DenseVector::from_fn(p, |_| rng.gen_range(-1.0..1.0));
            let y = rng.gen_range(-2.0..2.0);
            orfit
                .step(&model, &loss, &StreamSample::new(x.clone(), y, i))
                .unwrap();
            rls.ewrls_step(&x, y).unwrap();
            let scale = orfit.parameters().norm().max(1.0);
            let diff = orfit.parameters().max_abs_diff(rls.parameters());
            assert!(
                diff / scale <= 1e-8,
                "step {i}: relative gap {}",
                diff / scale
            );
        }
    }

    #[test]
    fn recursion_tracks_the_closed_form_for_each_lambda() {
        let p = 20;
        let k = 10;
        for &lambda in &[1.0, 0.9, 0.5] {
            let mut rng = ChaCha8Rng::seed_from_u64(1000 + (lambda * 10.0) as u64);
            let w0 = DenseVector::from_fn(p, |_| rng.gen_range(-0.5..0.5));
            let mut state = RlsState::new(w0.clone(), lambda).unwrap();
            let mut xs = Vec::new();
            let mut ys = Vec::new();
            for _ in 0..k {
                let x = DenseVector::from_fn(p, |_| rng.gen_range(-1.0..1.0));
                let y = rng.gen_range(-2.0..2.0);
                state.ewrls_step(&x, y).unwrap();
                xs.push(x);
                ys.push(y);
                let oracle = closed_form_ewrls(&xs, &ys, lambda, None, &w0).unwrap();
                let scale = oracle.norm().max(1.0);
                let diff = state.parameters().max_abs_diff(&oracle);
                assert!(
                    diff / scale <= 1e-8,
                    "lambda {lambda}, {} samples: relative gap {}",
                    xs.len(),
                    diff / scale
                );
            }
        }
    }

    #[test]
    fn recursion_matches_closed_form_under_an_explicit_regularizer() {
        let p = 6;
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        // SPD regularizer: diagonal dominance.
        let mut pi = DenseMatrix::identity(p);
        for r in 0..p {
            for c in 0..p {
                let bump = if r == c {
                    2.0
                } else {
                    0.1 * rng.gen_range(-1.0..1.0)
                };
                pi.set(r, c, pi.get(r, c) + bump);
            }
        }
        // Symmetrize.
        let pi = {
            let mut s = pi.clone();
            for r in 0..p {
                for c in 0..p {
                    s.set(r, c, 0.5 * (pi.get(r, c) + pi.get(c, r)));
                }
            }
            s
        };
        let w0 = DenseVector::from_fn(p, |_| rng.gen_range(-1.0..1.0));
        let mut state = RlsState::with_regularizer(w0.clone(), 0.9, pi.clone()).unwrap();
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for _ in 0..5 {
            let x = DenseVector::from_fn(p, |_| rng.gen_range(-1.0..1.0));
            let y = rng.gen_range(-1.0..1.0);
            state.ewrls_step(&x, y).unwrap();
            xs.push(x);
            ys.push(y);
        }
        let oracle = closed_form_ewrls(&xs, &ys, 0.9, Some(&pi), &w0).unwrap();
        let diff = state.parameters().max_abs_diff(&oracle);
        assert!(diff <= 1e-8 * oracle.norm().max(1.0));
    }

    #[test]
    fn p_matrix_matches_the_discounted_normal_matrix_inverse() {
        // With lambda in (0, 1], P_i inverts Pi + sum_k lambda^(-k) x_k x_k^T.
        let p = 8;
        for &lambda in &[1.0, 0.5] {
            let mut rng = ChaCha8Rng::seed_from_u64(3);
            let mut state = RlsState::new(DenseVector::zeros(p), lambda).unwrap();
            let mut normal = DenseMatrix::identity(p);
            for k in 1..=6usize {
                let x = DenseVector::from_fn(p, |_| rng.gen_range(-1.0..1.0));
                state.ewrls_step(&x, rng.gen_range(-1.0..1.0)).unwrap();
                let weight = lambda.powi(-(k as i32));
                for r in 0..p {
                    for c in 0..p {
                        let v = normal.get(r, c) + weight * x[r] * x[c];
                        normal.set(r, c, v);
                    }
                }
                let inv = normal.inverse().unwrap();
                let diff = state.p_matrix().max_abs_diff(&inv);
                assert!(
                    diff <= 1e-8 * inv.max_abs().max(1.0),
                    "lambda {lambda} step {k}"
                );
            }
        }
    }

    #[test]
    fn projector_identities_at_zero_lambda() {
        let p = 10;
        let k = 6;
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mut state = RlsState::new(DenseVector::zeros(p), 0.0).unwrap();
        let mut seen = Vec::new();
        for i in 1..=k {
            let x = DenseVector::from_fn(p, |_| rng.gen_range(-1.0..1.0));
            state.ewrls_step(&x, rng.gen_range(-1.0..1.0)).unwrap();
            seen.push(x);
            let pm = state.p_matrix();
            // Exact symmetry by construction.
            for r in 0..p {
                for c in 0..p {
                    assert_eq!(pm.get(r, c), pm.get(c, r));
                }
            }
            // Idempotent within tolerance.
            let pp = pm.matmul(pm).unwrap();
            assert!(pp.max_abs_diff(pm) <= 1e-8);
            // Annihilates everything seen.
            for x in &seen {
                assert!(pm.matvec(x).unwrap().norm() <= 1e-8 * x.norm());
            }
            // Rank p - i via the trace of the projector.
            let trace: f64 = (0..p).map(|j| pm.get(j, j)).sum();
            assert!((trace - (p - i) as f64).abs() <= 1e-6);
        }
    }

    #[test]
    fn linear_ntk_step_is_bitwise_the_ewrls_step() {
        let p = 12;
        let model = ModelSpec::linear(p);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let mut a = RlsState::new(DenseVector::zeros(p), 0.0).unwrap();
        let mut b = RlsState::new(DenseVector::zeros(p), 0.0).unwrap();
        for _ in 0..6 {
            let x = DenseVector::from_fn(p, |_| rng.gen_range(-1.0..1.0));
            let y = rng.gen_range(-1.0..1.0);
            a.ewrls_step(&x, y).unwrap();
            b.ntkrls_step(&model, &x, y).unwrap();
            assert_eq!(a.parameters(), b.parameters());
            assert_eq!(a.p_matrix(), b.p_matrix());
        }
    }

    #[test]
    fn nonlinear_ntk_matches_the_one_pass_learner_and_fits_linearized_targets() {
        let model = ModelSpec::mlp(4, vec![6]);
        let p = model.param_dim();
        let loss = LossSpec::Squared;
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let w0 = DenseVector::from_fn(p, |_| 0.1 * rng.gen_range(-1.0..1.0));
        let mut orfit = OrfitState::new(w0.clone(), MemoryPolicy::Unbounded).unwrap();
        let mut ntk = RlsState::new(w0, 0.0).unwrap();
        for i in 0..5 {
            let x = DenseVector::from_fn(4, |_| rng.gen_range(-1.0..1.0));
            let y = rng.gen_range(-1.0..1.0);
            let lin = LinearizedSample::linearize(&model, ntk.parameters(), &x, y).unwrap();
            orfit
                .step(&model, &loss, &StreamSample::new(x.clone(), y, i))
                .unwrap();
            ntk.ntkrls_step(&model, &x, y).unwrap();
            // Linearized constraint holds right after the step.
            let fit = lin.ytilde - lin.grad.dot(ntk.parameters());
            assert!(
                fit.abs() <= 1e-8 * (1.0 + y.abs()),
                "step {i}: residual {fit}"
            );
            let scale = orfit.parameters().norm().max(1.0);
            let diff = orfit.parameters().max_abs_diff(ntk.parameters());
            assert!(diff / scale <= 1e-6, "step {i} divergence {}", diff / scale);
        }
    }

    #[test]
    fn degenerate_branches_at_zero_lambda() {
        let mut state = RlsState::new(DenseVector::zeros(2), 0.0).unwrap();
        state.ewrls_step(&v(&[1.0, 0.0]), 2.0).unwrap();
        // Same sample again: consistent skip.
        let out = state.ewrls_step(&v(&[1.0, 0.0]), 2.0).unwrap();
        assert_eq!(out, StepOutcome::Skipped);
        assert_eq!(state.parameters().as_slice(), &[2.0, 0.0]);
        assert_eq!(state.step_count(), 2);
        // Contradicting target: inconsistent stream.
        let err = state.ewrls_step(&v(&[2.0, 0.0]), 1.0).unwrap_err();
        assert!(matches!(err, Error::InconsistentStream { .. }));
    }

    #[test]
    fn lambda_validation_and_closed_form_domain() {
        assert!(RlsState::new(DenseVector::zeros(2), -0.1).is_err());
        assert!(RlsState::new(DenseVector::zeros(2), 1.5).is_err());
        let w0 = v(&[1.0, -1.0]);
        assert_eq!(closed_form_ewrls(&[], &[], 0.7, None, &w0).unwrap(), w0);
        assert!(closed_form_ewrls(&[], &[], 0.0, None, &w0).is_err());
    }

    #[test]
    fn min_norm_oracle_examples() {
        let w0 = DenseVector::zeros(2);
        assert_eq!(
            min_norm_oracle(&[v(&[1.0, 0.0])], &[2.0], &w0)
                .unwrap()
                .as_slice(),
            &[2.0, 0.0]
        );
        assert_eq!(
            min_norm_oracle(&[v(&[1.0, 0.0]), v(&[1.0, 1.0])], &[2.0, 3.0], &w0)
                .unwrap()
                .as_slice(),
            &[2.0, 1.0]
        );
        let w0 = v(&[4.0, -2.0]);
        assert_eq!(min_norm_oracle(&[], &[], &w0).unwrap(), w0);
        // Duplicated row: rank-deficient Gram.
        assert!(matches!(
            min_norm_oracle(&[v(&[1.0, 0.0]), v(&[1.0, 0.0])], &[1.0, 2.0], &w0),
            Err(Error::DegenerateSystem(_))
        ));
    }

    #[test]
    fn min_norm_oracle_satisfies_constraints_and_minimality() {
        let p = 9;
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let rows: Vec<DenseVector> = (0..4)
            .map(|_| DenseVector::from_fn(p, |_| rng.gen_range(-1.0..1.0)))
            .collect();
        let targets: Vec<f64> = (0..4).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let w0 = DenseVector::from_fn(p, |_| rng.gen_range(-1.0..1.0));
        let w = min_norm_oracle(&rows, &targets, &w0).unwrap();
        for (row, t) in rows.iter().zip(&targets) {
            assert!((row.dot(&w) - t).abs() <= 1e-10);
        }
        // The correction w - w0 lies in the row span: projecting it off
        // the rows leaves nothing.
        let correction = w.minus(&w0);
        let mut basis: Vec<DenseVector> = Vec::new();
        for r in &rows {
            if let Some(res) =
                crate::linalg::gram_schmidt_append(&basis, r, crate::linalg::GS_DEFAULT_TOL)
                    .unwrap()
            {
                basis.push(res);
            }
        }
        let residual = crate::linalg::project_onto_complement(&correction, &basis).unwrap();
        assert!(residual.norm() <= 1e-10 * correction.norm().max(1.0));
    }
}
