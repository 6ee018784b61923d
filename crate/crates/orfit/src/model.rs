//! Prediction models over a flat parameter vector, plus the loss.
//!
//! Two model kinds cover the regimes of interest: a linear model whose
//! parameter vector is the feature weight vector itself, and a small
//! tanh MLP with a scalar linear output for the nonlinear regime. Both
//! expose the value and the gradient with respect to the packed
//! parameter vector; gradients are computed by hand-rolled backprop.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::DenseVector;

/// Hidden-layer activation. Only tanh is supported: smooth and bounded,
/// which keeps linearized-model behavior tame at small scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Activation {
    #[default]
    Tanh,
}

/// Model architecture. The parameter vector layout for `Mlp` packs each
/// layer as its weight matrix in row-major order followed by its bias
/// vector, layers in input-to-output order, final output scalar and
/// linear.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModelSpec {
    Linear {
        input_dim: usize,
    },
    Mlp {
        input_dim: usize,
        hidden: Vec<usize>,
        #[serde(default)]
        activation: Activation,
    },
}

impl ModelSpec {
    pub fn linear(input_dim: usize) -> Self {
        ModelSpec::Linear { input_dim }
    }

    pub fn mlp(input_dim: usize, hidden: Vec<usize>) -> Self {
        ModelSpec::Mlp {
            input_dim,
            hidden,
            activation: Activation::Tanh,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            ModelSpec::Linear { input_dim } => {
                if *input_dim == 0 {
                    return Err(Error::Configuration(
                        "linear model needs positive input_dim".into(),
                    ));
                }
            }
            ModelSpec::Mlp {
                input_dim, hidden, ..
            } => {
                if *input_dim == 0 {
                    return Err(Error::Configuration("mlp needs positive input_dim".into()));
                }
                if hidden.is_empty() {
                    return Err(Error::Configuration(
                        "mlp needs at least one hidden layer".into(),
                    ));
                }
                if hidden.contains(&0) {
                    return Err(Error::Configuration(
                        "mlp hidden widths must be positive".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn input_dim(&self) -> usize {
        match self {
            ModelSpec::Linear { input_dim } => *input_dim,
            ModelSpec::Mlp { input_dim, .. } => *input_dim,
        }
    }

    /// Layer widths from input to the scalar output, e.g. `[d, h1, 1]`.
    fn layer_sizes(&self) -> Vec<usize> {
        match self {
            ModelSpec::Linear { input_dim } => vec![*input_dim],
            ModelSpec::Mlp {
                input_dim, hidden, ..
            } => {
                let mut sizes = Vec::with_capacity(hidden.len() + 2);
                sizes.push(*input_dim);
                sizes.extend_from_slice(hidden);
                sizes.push(1);
                sizes
            }
        }
    }

    /// Length of the packed parameter vector.
    pub fn param_dim(&self) -> usize {
        match self {
            ModelSpec::Linear { input_dim } => *input_dim,
            ModelSpec::Mlp { .. } => {
                let sizes = self.layer_sizes();
                sizes.windows(2).map(|lw| lw[1] * (lw[0] + 1)).sum()
            }
        }
    }

    fn check_dims(&self, w: &DenseVector, x: &DenseVector) -> Result<()> {
        if w.len() != self.param_dim() {
            return Err(Error::DimensionMismatch {
                context: "parameter vector",
                expected: self.param_dim(),
                got: w.len(),
            });
        }
        if x.len() != self.input_dim() {
            return Err(Error::DimensionMismatch {
                context: "input vector",
                expected: self.input_dim(),
                got: x.len(),
            });
        }
        Ok(())
    }

    /// Scalar model output `f(x; w)`.
    pub fn predict(&self, w: &DenseVector, x: &DenseVector) -> Result<f64> {
        self.check_dims(w, x)?;
        match self {
            ModelSpec::Linear { .. } => Ok(w.dot(x)),
            ModelSpec::Mlp { .. } => Ok(self.forward(w, x).0),
        }
    }

    /// Gradient of the output with respect to `w`, length `param_dim`.
    ///
    /// For the linear model this is `x` itself, independent of `w`.
    pub fn gradient(&self, w: &DenseVector, x: &DenseVector) -> Result<DenseVector> {
        Ok(self.value_and_gradient(w, x)?.1)
    }

    /// Output and gradient in one pass (the backward pass reuses the
    /// forward activations).
    pub fn value_and_gradient(
        &self,
        w: &DenseVector,
        x: &DenseVector,
    ) -> Result<(f64, DenseVector)> {
        self.check_dims(w, x)?;
        match self {
            ModelSpec::Linear { .. } => Ok((w.dot(x), x.clone())),
            ModelSpec::Mlp { .. } => {
                let (value, activations) = self.forward(w, x);
                let grad = self.backward(w, &activations);
                Ok((value, grad))
            }
        }
    }

    /// MLP forward pass; returns the scalar output and the per-layer
    /// post-activation values (layer 0 is the input itself).
    fn forward(&self, w: &DenseVector, x: &DenseVector) -> (f64, Vec<Vec<f64>>) {
        let sizes = self.layer_sizes();
        let params = w.as_slice();
        let mut activations: Vec<Vec<f64>> = Vec::with_capacity(sizes.len());
        activations.push(x.as_slice().to_vec());
        let mut offset = 0;
        for l in 0..sizes.len() - 1 {
            let (fan_in, fan_out) = (sizes[l], sizes[l + 1]);
            let weights = &params[offset..offset + fan_out * fan_in];
            let biases = &params[offset + fan_out * fan_in..offset + fan_out * (fan_in + 1)];
            offset += fan_out * (fan_in + 1);
            let prev = activations.last().expect("input pushed");
            let mut out = Vec::with_capacity(fan_out);
            let last_layer = l == sizes.len() - 2;
            for i in 0..fan_out {
                let row = &weights[i * fan_in..(i + 1) * fan_in];
                let z: f64 = row.iter().zip(prev).map(|(a, b)| a * b).sum::<f64>() + biases[i];
                out.push(if last_layer { z } else { z.tanh() });
            }
            activations.push(out);
        }
        let value = activations.last().expect("output layer")[0];
        (value, activations)
    }

    /// Backprop of the scalar output through the stored activations.
    fn backward(&self, w: &DenseVector, activations: &[Vec<f64>]) -> DenseVector {
        let sizes = self.layer_sizes();
        let params = w.as_slice();
        let mut grad = vec![0.0; self.param_dim()];
        let layer_offsets: Vec<usize> = {
            let mut offs = vec![0];
            for lw in sizes.windows(2) {
                offs.push(offs.last().unwrap() + lw[1] * (lw[0] + 1));
            }
            offs
        };
        // delta holds d(output)/d(pre-activation of layer l+1).
        let mut delta = vec![1.0];
        for l in (0..sizes.len() - 1).rev() {
            let (fan_in, fan_out) = (sizes[l], sizes[l + 1]);
            let offset = layer_offsets[l];
            let weights = &params[offset..offset + fan_out * fan_in];
            let prev = &activations[l];
            for i in 0..fan_out {
                let di = delta[i];
                let gw = &mut grad[offset + i * fan_in..offset + (i + 1) * fan_in];
                for (g, h) in gw.iter_mut().zip(prev) {
                    *g = di * h;
                }
                grad[offset + fan_out * fan_in + i] = di;
            }
            if l > 0 {
                // Propagate through W^T and the tanh of the previous
                // layer: tanh'(z) = 1 - tanh(z)^2, read off the stored
                // post-activation.
                let mut next = vec![0.0; fan_in];
                for i in 0..fan_out {
                    let di = delta[i];
                    let row = &weights[i * fan_in..(i + 1) * fan_in];
                    for (nj, wij) in next.iter_mut().zip(row) {
                        *nj += di * wij;
                    }
                }
                for (nj, h) in next.iter_mut().zip(prev) {
                    *nj *= 1.0 - h * h;
                }
                delta = next;
            }
        }
        DenseVector::new(grad).expect("finite gradient from finite inputs")
    }
}

/// Loss specification. Squared loss with the half factor, so the
/// derivative with respect to the prediction is simply `f - y`; any
/// loss with a nonzero derivative at a miss drives the same exact-fit
/// step because the step size cancels the scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LossSpec {
    #[default]
    Squared,
}

impl LossSpec {
    /// `l(y, f) = 0.5 (y - f)^2`.
    pub fn loss(&self, y: f64, f: f64) -> f64 {
        let r = y - f;
        0.5 * r * r
    }

    /// Derivative of the loss with respect to the prediction: `f - y`.
    pub fn dloss(&self, y: f64, f: f64) -> f64 {
        f - y
    }

    /// Loss value and loss gradient with respect to `w`. The gradient is
    /// exactly `dloss * model.gradient(w, x)`, entry by entry.
    pub fn loss_and_grad(
        &self,
        model: &ModelSpec,
        w: &DenseVector,
        x: &DenseVector,
        y: f64,
    ) -> Result<(f64, DenseVector)> {
        let (f, mut grad) = model.value_and_gradient(w, x)?;
        grad.scale(self.dloss(y, f));
        Ok((self.loss(y, f), grad))
    }
}

/// Central finite-difference gradient, the oracle used to validate
/// backprop: entry i is `(f(w + h e_i) - f(w - h e_i)) / 2h`.
pub fn finite_difference_gradient(
    model: &ModelSpec,
    w: &DenseVector,
    x: &DenseVector,
    step: f64,
) -> Result<DenseVector> {
    let mut out = vec![0.0; w.len()];
    let mut probe = w.clone();
    for i in 0..w.len() {
        let orig = probe[i];
        probe.as_mut_slice()[i] = orig + step;
        let plus = model.predict(&probe, x)?;
        probe.as_mut_slice()[i] = orig - step;
        let minus = model.predict(&probe, x)?;
        probe.as_mut_slice()[i] = orig;
        out[i] = (plus - minus) / (2.0 * step);
    }
    DenseVector::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn vec_of(entries: &[f64]) -> DenseVector {
        DenseVector::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn linear_predict_is_dot_product() {
        let model = ModelSpec::linear(2);
        assert_eq!(
            model
                .predict(&vec_of(&[2.0, 1.0]), &vec_of(&[1.0, 1.0]))
                .unwrap(),
            3.0
        );
        assert_eq!(
            model
                .predict(&DenseVector::zeros(2), &vec_of(&[5.0, -7.0]))
                .unwrap(),
            0.0
        );
    }

    #[test]
    fn zero_mlp_predicts_zero() {
        let model = ModelSpec::mlp(3, vec![1]);
        let w = DenseVector::zeros(model.param_dim());
        let x = vec_of(&[0.3, -1.2, 4.0]);
        assert_eq!(model.predict(&w, &x).unwrap(), 0.0);
    }

    #[test]
    fn mlp_param_dim_counts_weights_and_biases() {
        // 3 -> 4 -> 2 -> 1: (4*3+4) + (2*4+2) + (1*2+1) = 16 + 10 + 3.
        let model = ModelSpec::mlp(3, vec![4, 2]);
        assert_eq!(model.param_dim(), 29);
        assert_eq!(ModelSpec::linear(7).param_dim(), 7);
    }

    #[test]
    fn linear_gradient_is_input_independent_of_w() {
        let model = ModelSpec::linear(2);
        let x = vec_of(&[1.0, 0.0]);
        for w in [vec_of(&[0.0, 0.0]), vec_of(&[3.0, -9.0])] {
            assert_eq!(model.gradient(&w, &x).unwrap(), x);
        }
    }

    #[test]
    fn zero_output_weights_kill_hidden_gradient() {
        let model = ModelSpec::mlp(2, vec![3]);
        // Nonzero first layer, zero output layer weights and bias.
        let mut w = vec![0.0; model.param_dim()];
        for (i, v) in w.iter_mut().take(3 * 2 + 3).enumerate() {
            *v = 0.1 * (i as f64 + 1.0);
        }
        let w = DenseVector::new(w).unwrap();
        let grad = model.gradient(&w, &vec_of(&[1.0, -1.0])).unwrap();
        // Gradient on the first-layer weights and biases must vanish.
        for i in 0..(3 * 2 + 3) {
            assert_eq!(grad[i], 0.0, "entry {i}");
        }
        // Gradient on the output bias is 1.
        assert_eq!(grad[model.param_dim() - 1], 1.0);
    }

    #[test]
    fn mlp_gradient_matches_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let model = ModelSpec::mlp(4, vec![5, 3]);
        for _ in 0..10 {
            let w = DenseVector::from_fn(model.param_dim(), |_| rng.gen_range(-0.8..0.8));
            let x = DenseVector::from_fn(4, |_| rng.gen_range(-1.5..1.5));
            let grad = model.gradient(&w, &x).unwrap();
            let fd = finite_difference_gradient(&model, &w, &x, 1e-5).unwrap();
            let scale = fd.max_abs().max(1e-3);
            let err = grad.max_abs_diff(&fd) / scale;
            assert!(err <= 1e-5, "relative error {err}");
        }
    }

    #[test]
    fn loss_and_grad_hand_values() {
        let loss = LossSpec::Squared;
        let model = ModelSpec::linear(2);
        let (l, g) = loss
            .loss_and_grad(&model, &DenseVector::zeros(2), &vec_of(&[1.0, 0.0]), 2.0)
            .unwrap();
        assert_eq!(l, 2.0);
        assert_eq!(g.as_slice(), &[-2.0, 0.0]);

        let (l, g) = loss
            .loss_and_grad(&model, &vec_of(&[2.0, 0.0]), &vec_of(&[1.0, 1.0]), 3.0)
            .unwrap();
        assert_eq!(l, 0.5);
        assert_eq!(g.as_slice(), &[-1.0, -1.0]);

        // Interpolated point: zero loss, zero gradient.
        let (l, g) = loss
            .loss_and_grad(&model, &vec_of(&[2.0, 1.0]), &vec_of(&[1.0, 1.0]), 3.0)
            .unwrap();
        assert_eq!(l, 0.0);
        assert_eq!(g.as_slice(), &[0.0, 0.0]);
    }

    #[test]
    fn loss_gradient_factorizes_bitwise_through_model_gradient() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let loss = LossSpec::Squared;
        for model in [ModelSpec::linear(5), ModelSpec::mlp(5, vec![4])] {
            for _ in 0..5 {
                let w = DenseVector::from_fn(model.param_dim(), |_| rng.gen_range(-1.0..1.0));
                let x = DenseVector::from_fn(5, |_| rng.gen_range(-1.0..1.0));
                let y = rng.gen_range(-2.0..2.0);
                let (_, lg) = loss.loss_and_grad(&model, &w, &x, y).unwrap();
                let f = model.predict(&w, &x).unwrap();
                let expected = model.gradient(&w, &x).unwrap().scaled(loss.dloss(y, f));
                assert_eq!(lg, expected, "must factorize exactly");
            }
        }
    }

    #[test]
    fn dloss_matches_loss_by_finite_differences() {
        let loss = LossSpec::Squared;
        for (y, f) in [(2.0, 0.5), (-1.0, -1.0), (0.0, 3.25)] {
            let h = 1e-6;
            let fd = (loss.loss(y, f + h) - loss.loss(y, f - h)) / (2.0 * h);
            assert!((fd - loss.dloss(y, f)).abs() <= 1e-6);
        }
    }

    #[test]
    fn dimension_mismatches_are_rejected() {
        let model = ModelSpec::linear(3);
        let err = model
            .predict(&DenseVector::zeros(2), &DenseVector::zeros(3))
            .unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
        let err = model
            .predict(&DenseVector::zeros(3), &DenseVector::zeros(2))
            .unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn model_spec_serde_round_trip() {
        let model = ModelSpec::mlp(784, vec![16, 8]);
        let json = serde_json::to_string(&model).unwrap();
        assert_eq!(serde_json::from_str::<ModelSpec>(&json).unwrap(), model);
        let linear: ModelSpec = serde_json::from_str(r#"{"kind":"linear","input_dim":4}"#).unwrap();
        assert_eq!(linear, ModelSpec::linear(4));
    }

    #[test]
    fn validate_rejects_bad_shapes() {
        assert!(ModelSpec::linear(0).validate().is_err());
        assert!(ModelSpec::mlp(3, vec![]).validate().is_err());
        assert!(ModelSpec::mlp(3, vec![2, 0]).validate().is_err());
        assert!(ModelSpec::mlp(3, vec![2]).validate().is_ok());
    }
}
