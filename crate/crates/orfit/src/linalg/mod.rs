//! Dense linear algebra sized for streaming regression.
//!
//! Everything here is deliberately simple: row-major dense storage,
//! Gram-Schmidt with re-orthogonalization, and a one-sided Jacobi SVD
//! for the small matrices produced by subspace summarization. Parameter
//! dimensions in this crate run to a few thousand and the matrices fed
//! to the SVD stay near the memory cap, so cache-friendly loops beat a
//! general-purpose BLAS dependency.

mod dense;
mod ortho;
mod svd;

pub use dense::{DenseMatrix, DenseVector};
pub use ortho::{gram_schmidt_append, project_onto_complement, GS_DEFAULT_TOL};
pub use svd::{svd_small, Svd};

/// Absolute floor below which a vector norm is treated as zero.
pub const EPS_ZERO: f64 = 1e-12;
