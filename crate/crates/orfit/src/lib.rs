//! One-pass streaming regression for overparameterized models.
//!
//! The central algorithm is orthogonal recursive fitting: each incoming
//! sample is fit exactly by a step along the loss gradient projected onto
//! the orthogonal complement of previously stored model gradients. In the
//! overparameterized regime this interpolates every new sample while
//! leaving all earlier fitted predictions unchanged, without revisiting
//! old data.
//!
//! The crate also provides the classical recursive least-squares family
//! (exponentially weighted, and a linearized variant for nonlinear
//! models), bounded-memory subspace summaries via incremental PCA,
//! continual-learning baselines, IDX/MNIST ingestion with image rotation,
//! and an experiment harness with a verification suite.
//!
//! ```
//! use orfit::learner::{MemoryPolicy, OrfitState};
//! use orfit::model::{LossSpec, ModelSpec};
//! use orfit::stream::gaussian_linear_with_teacher;
//! use orfit::DenseVector;
//!
//! # fn main() -> orfit::Result<()> {
//! // 4 samples in 8 dimensions: fewer samples than parameters.
//! let (stream, _teacher) = gaussian_linear_with_teacher(8, 4, 7)?;
//! let model = ModelSpec::linear(8);
//! let mut learner = OrfitState::new(DenseVector::zeros(8), MemoryPolicy::Unbounded)?;
//! for sample in &stream {
//!     learner.step(&model, &LossSpec::Squared, sample)?;
//! }
//! // Every sample seen is still fitted exactly — no forgetting.
//! for sample in &stream {
//!     let err = (model.predict(learner.parameters(), &sample.x)? - sample.y).abs();
//!     assert!(err < 1e-10);
//! }
//! # Ok(())
//! # }
//! ```

pub mod baselines;
pub mod error;
pub mod harness;
pub mod ipca;
pub mod learner;
pub mod linalg;
pub mod model;
pub mod rls;
pub mod stream;

pub use error::{Error, Result};
pub use linalg::{DenseMatrix, DenseVector};
pub use model::{LossSpec, ModelSpec};
