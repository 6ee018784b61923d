//! Bounded-memory summary of an orthogonal basis.
//!
//! A growing set of mutually orthogonal gradient residuals is compressed
//! into its top-`m` left-singular subspace, updated one vector at a time.
//! Because each incoming vector is already orthogonal to the current
//! subspace, the update reduces to a small diagonal SVD: append the new
//! norm to the kept singular values, sort, truncate. The right-singular
//! factor is never formed or stored.

use crate::error::{Error, Result};
use crate::linalg::{svd_small, DenseMatrix, DenseVector, EPS_ZERO};

/// Residuals are contractually orthogonal to the summarized subspace;
/// cross terms above this fraction of the leading singular value are
/// reported as contract violations instead of silently absorbed.
pub const CROSS_TERM_TOL: f64 = 1e-8;

/// Top-`m` singular summary of the vectors absorbed so far.
///
/// Holds at most `m` orthonormal columns and their singular values in
/// descending order. A value type: cloning gives an independent summary,
/// and a single writer per stream is assumed.
#[derive(Debug, Clone, PartialEq)]
pub struct SubspaceSummary {
    dim: usize,
    cap: usize,
    columns: Vec<DenseVector>,
    sigma: Vec<f64>,
    count: u64,
}

impl SubspaceSummary {
    /// Empty summary over vectors of length `dim` keeping at most `cap`
    /// directions.
    pub fn new(dim: usize, cap: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Configuration(
                "summary dimension must be positive".into(),
            ));
        }
        if cap == 0 {
            return Err(Error::Configuration(
                "summary memory cap must be positive".into(),
            ));
        }
        Ok(Self {
            dim,
            cap,
            columns: Vec::new(),
            sigma: Vec::new(),
            count: 0,
        })
    }

    /// Rebuilds a summary from stored parts, re-validating invariants.
    pub fn from_parts(
        dim: usize,
        cap: usize,
        columns: Vec<DenseVector>,
        sigma: Vec<f64>,
        count: u64,
    ) -> Result<Self> {
        let s = Self {
            dim,
            cap,
            columns,
            sigma,
            count,
        };
        if s.dim == 0 || s.cap == 0 {
            return Err(Error::Configuration(
                "summary dimensions must be positive".into(),
            ));
        }
        if s.columns.len() != s.sigma.len() {
            return Err(Error::DimensionMismatch {
                context: "summary singular values",
                expected: s.columns.len(),
                got: s.sigma.len(),
            });
        }
        if s.columns.len() > s.cap {
            return Err(Error::ContractViolation(format!(
                "summary holds {} columns but cap is {}",
                s.columns.len(),
                s.cap
            )));
        }
        if s.columns.iter().any(|c| c.len() != s.dim) {
            return Err(Error::ContractViolation(
                "summary column length disagrees with dimension".into(),
            ));
        }
        if s.sigma.windows(2).any(|w| w[0] < w[1]) || s.sigma.iter().any(|v| *v <= 0.0) {
            return Err(Error::ContractViolation(
                "summary singular values must be positive and descending".into(),
            ));
        }
        if s.orthonormality_error() > 1e-8 {
            return Err(Error::ContractViolation(
                "summary columns are not orthonormal".into(),
            ));
        }
        Ok(s)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn memory_cap(&self) -> usize {
        self.cap
    }

    /// Number of kept directions, at most the cap.
    pub fn rank(&self) -> usize {
        self.columns.len()
    }

    /// Total vectors ever absorbed, including zero-norm no-ops.
    pub fn absorbed(&self) -> u64 {
        self.count
    }

    pub fn basis(&self) -> &[DenseVector] {
        &self.columns
    }

    pub fn sigma(&self) -> &[f64] {
        &self.sigma
    }

    /// Max-entry deviation of the column Gram matrix from identity.
    pub fn orthonormality_error(&self) -> f64 {
        let r = self.columns.len();
        let mut worst: f64 = 0.0;
        for i in 0..r {
            for j in i..r {
                let g = self.columns[i].dot(&self.columns[j]);
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((g - target).abs());
            }
        }
        worst
    }

    /// Absorbs one residual vector, keeping the top-`cap` subspace.
    ///
    /// `v` must already be orthogonal to the kept columns (it is the
    /// projected residual of a gradient); vectors of norm at most
    /// `EPS_ZERO` leave the subspace unchanged. The absorbed count
    /// increments either way.
    pub fn append(&mut self, v: &DenseVector) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                context: "summary append operand",
                expected: self.dim,
                got: v.len(),
            });
        }
        self.count += 1;
        let norm = v.norm();
        if norm <= EPS_ZERO {
            return Ok(());
        }
        if !self.columns.is_empty() {
            let sigma_max = self.sigma[0];
            let cross = self
                .columns
                .iter()
                .map(|u| u.dot(v).abs())
                .fold(0.0, f64::max);
            if cross > CROSS_TERM_TOL * sigma_max {
                return Err(Error::ContractViolation(format!(
                    "append operand is not orthogonal to the summary: \
                     cross term {cross:.3e} exceeds {CROSS_TERM_TOL:.1e} * {sigma_max:.3e}"
                )));
            }
        }

        // The expanded factor is diagonal because v is pre-projected:
        // diag(sigma, ||v||). Its SVD sorts and truncates.
        let r = self.columns.len();
        let mut diag = self.sigma.clone();
        diag.push(norm);
        let inner = svd_small(&DenseMatrix::from_diagonal(&diag))?;
        let keep = (r + 1).min(self.cap);

        let unit = v.scaled(1.0 / norm);
        let mut kept = keep;
        while kept > 0 && inner.sigma[kept - 1] <= EPS_ZERO {
            kept -= 1;
        }
        let plans: Vec<Option<(usize, f64)>> =
            (0..kept).map(|j| signed_unit_column(&inner.u, j)).collect();

        let mut new_columns = Vec::with_capacity(kept);
        if plans.iter().all(Option::is_some) {
            // Sorting a diagonal factor permutes columns; move them
            // without touching the vector data.
            let mut old: Vec<Option<DenseVector>> = std::mem::take(&mut self.columns)
                .into_iter()
                .map(Some)
                .collect();
            old.push(Some(unit));
            for plan in &plans {
                let (row, sign) = plan.expect("checked all_units");
                let mut col = old[row].take().expect("permutation rows are distinct");
                if sign < 0.0 {
                    col.scale(-1.0);
                }
                new_columns.push(col);
            }
        } else {
            for j in 0..kept {
                let mut col = DenseVector::zeros(self.dim);
                for k in 0..=r {
                    let coeff = inner.u.get(k, j);
                    if coeff != 0.0 {
                        let source = if k < r { &self.columns[k] } else { &unit };
                        col.add_scaled(coeff, source);
                    }
                }
                new_columns.push(col);
            }
        }
        self.columns = new_columns;
        self.sigma = inner.sigma[..kept].to_vec();
        Ok(())
    }

    /// `g` minus its component in the summarized subspace: `g - U U^T g`.
    pub fn project_complement(&self, g: &DenseVector) -> Result<DenseVector> {
        if g.len() != self.dim {
            return Err(Error::DimensionMismatch {
                context: "summary projection operand",
                expected: self.dim,
                got: g.len(),
            });
        }
        let mut out = g.clone();
        for u in &self.columns {
            let coeff = u.dot(g);
            out.add_scaled(-coeff, u);
        }
        Ok(out)
    }
}

/// If column `j` of `m` has exactly one nonzero entry equal to plus or
/// minus one, returns its row and sign.
fn signed_unit_column(m: &DenseMatrix, j: usize) -> Option<(usize, f64)> {
    let mut hit: Option<(usize, f64)> = None;
    for i in 0..m.rows() {
        let x = m.get(i, j);
        if x == 0.0 {
            continue;
        }
        if x != 1.0 && x != -1.0 {
            return None;
        }
        if hit.is_some() {
            return None;
        }
        hit = Some((i, x));
    }
    hit
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{gram_schmidt_append, GS_DEFAULT_TOL};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn e(i: usize, dim: usize) -> DenseVector {
        DenseVector::from_fn(dim, |k| if k == i { 1.0 } else { 0.0 })
    }

    #[test]
    fn append_sorts_new_dominant_direction_first() {
        let mut s = SubspaceSummary::new(3, 2).unwrap();
        s.append(&e(0, 3)).unwrap();
        assert_eq!(s.sigma(), &[1.0]);
        s.append(&e(1, 3).scaled(2.0)).unwrap();
        assert_eq!(s.sigma(), &[2.0, 1.0]);
        assert_eq!(s.basis()[0], e(1, 3));
        assert_eq!(s.basis()[1], e(0, 3));
        assert_eq!(s.absorbed(), 2);
    }

    #[test]
    fn append_truncates_smallest_at_cap() {
        let mut s = SubspaceSummary::new(4, 2).unwrap();
        s.append(&e(0, 4).scaled(3.0)).unwrap();
        s.append(&e(1, 4)).unwrap();
        assert_eq!(s.sigma(), &[3.0, 1.0]);
        s.append(&e(2, 4).scaled(2.0)).unwrap();
        assert_eq!(s.sigma(), &[3.0, 2.0]);
        assert_eq!(s.basis()[0], e(0, 4));
        assert_eq!(s.basis()[1], e(2, 4));
        assert_eq!(s.rank(), 2);
    }

    #[test]
    fn equal_norms_keep_earlier_column_first() {
        let mut s = SubspaceSummary::new(3, 3).unwrap();
        s.append(&e(0, 3)).unwrap();
        s.append(&e(2, 3)).unwrap();
        assert_eq!(s.sigma(), &[1.0, 1.0]);
        assert_eq!(s.basis()[0], e(0, 3));
        assert_eq!(s.basis()[1], e(2, 3));
    }

    #[test]
    fn zero_vector_is_a_counted_no_op() {
        let mut s = SubspaceSummary::new(3, 2).unwrap();
        s.append(&e(1, 3)).unwrap();
        let before = s.clone();
        s.append(&DenseVector::zeros(3)).unwrap();
        assert_eq!(s.basis(), before.basis());
        assert_eq!(s.sigma(), before.sigma());
        assert_eq!(s.absorbed(), 2);
    }

    #[test]
    fn non_orthogonal_input_is_a_contract_violation() {
        let mut s = SubspaceSummary::new(3, 2).unwrap();
        s.append(&e(0, 3)).unwrap();
        let skewed = DenseVector::new(vec![0.5, 1.0, 0.0]).unwrap();
        assert!(matches!(
            s.append(&skewed),
            Err(Error::ContractViolation(_))
        ));
    }

    #[test]
    fn projection_examples() {
        let s = SubspaceSummary::new(2, 2).unwrap();
        let g = DenseVector::new(vec![1.0, 2.0]).unwrap();
        assert_eq!(s.project_complement(&g).unwrap(), g);

        let mut s = SubspaceSummary::new(2, 2).unwrap();
        s.append(&e(0, 2)).unwrap();
        let g = DenseVector::new(vec![3.0, 4.0]).unwrap();
        assert_eq!(s.project_complement(&g).unwrap().as_slice(), &[0.0, 4.0]);
    }

    #[test]
    fn projection_residual_is_orthogonal_to_summary() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let p = 20;
        let mut s = SubspaceSummary::new(p, 8).unwrap();
        let mut kept: Vec<DenseVector> = Vec::new();
        for _ in 0..5 {
            let raw = DenseVector::from_fn(p, |_| rng.gen_range(-1.0..1.0));
            if let Some(r) = gram_schmidt_append(&kept, &raw, GS_DEFAULT_TOL).unwrap() {
                s.append(&r).unwrap();
                kept.push(r);
            }
        }
        assert_eq!(s.rank(), 5);
        let g = DenseVector::from_fn(p, |_| rng.gen_range(-2.0..2.0));
        let res = s.project_complement(&g).unwrap();
        for u in s.basis() {
            assert!(u.dot(&res).abs() <= 1e-10 * g.norm());
        }
    }

    /// Batch oracle: the top-`keep` left-singular subspace of the matrix
    /// whose columns are `vectors`, computed through the Gram matrix.
    fn batch_top_subspace(vectors: &[DenseVector], keep: usize) -> Vec<DenseVector> {
        let a = DenseMatrix::from_columns(vectors).unwrap();
        let gram = a.transpose().matmul(&a).unwrap();
        let evd = svd_small(&gram).unwrap();
        let mut out = Vec::with_capacity(keep);
        for j in 0..keep {
            let coeffs = evd.u.column(j);
            let col = a.matvec(&coeffs).unwrap();
            out.push(col.scaled(1.0 / evd.sigma[j].sqrt()));
        }
        out
    }

    /// Frobenius norm of `U2 - U1 (U1^T U2)`; zero iff the spans agree.
    fn subspace_residual(u1: &[DenseVector], u2: &[DenseVector]) -> f64 {
        let mut total = 0.0;
        for c in u2 {
            let mut r = c.clone();
            for b in u1 {
                let coeff = b.dot(c);
                r.add_scaled(-coeff, b);
            }
            total += r.norm_sq();
        }
        total.sqrt()
    }

    #[test]
    fn truncated_summary_matches_batch_svd_of_all_twelve_columns() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let p = 30;
        let m = 10;
        let mut s = SubspaceSummary::new(p, m).unwrap();
        let mut all: Vec<DenseVector> = Vec::new();
        let mut ortho: Vec<DenseVector> = Vec::new();
        while all.len() < 12 {
            let raw = DenseVector::from_fn(p, |_| rng.gen_range(-1.0..1.0));
            let Some(r) = gram_schmidt_append(&ortho, &raw, GS_DEFAULT_TOL).unwrap() else {
                continue;
            };
            ortho.push(r.clone());
            let scaled = r.scaled(rng.gen_range(0.5..3.0));
            s.append(&scaled).unwrap();
            all.push(scaled);
        }
        assert_eq!(s.rank(), m);
        assert_eq!(s.absorbed(), 12);
        let oracle = batch_top_subspace(&all, m);
        let res = subspace_residual(s.basis(), &oracle).max(subspace_residual(&oracle, s.basis()));
        assert!(res <= 1e-8, "subspace residual {res}");
    }

    #[test]
    fn below_cap_summary_spans_the_gram_schmidt_subspace_exactly() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let p = 15;
        let mut s = SubspaceSummary::new(p, 10).unwrap();
        let mut ortho: Vec<DenseVector> = Vec::new();
        for _ in 0..6 {
            let raw = DenseVector::from_fn(p, |_| rng.gen_range(-1.0..1.0));
            if let Some(r) = gram_schmidt_append(&ortho, &raw, GS_DEFAULT_TOL).unwrap() {
                s.append(&r).unwrap();
                // subspace_residual treats its first argument as an
                // orthonormal basis, so keep the oracle normalized.
                let unit = r.scaled(1.0 / r.norm());
                ortho.push(unit);
            }
        }
        let res = subspace_residual(s.basis(), &ortho).max(subspace_residual(&ortho, s.basis()));
        assert!(res <= 1e-8, "subspace residual {res}");
        assert!(s.orthonormality_error() <= 1e-10);
    }

    #[test]
    fn capacity_and_unit_norm_invariants_hold_across_many_appends() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let p = 12;
        let m = 4;
        let mut s = SubspaceSummary::new(p, m).unwrap();
        for _ in 0..9 {
            // Draw orthogonal to the current summary so the contract holds
            // even after truncation.
            let raw = DenseVector::from_fn(p, |_| rng.gen_range(-1.0..1.0));
            let r = s.project_complement(&raw).unwrap();
            if r.norm() <= 1e-6 {
                continue;
            }
            s.append(&r).unwrap();
            assert!(s.rank() <= m);
            for c in s.basis() {
                assert!((c.norm() - 1.0).abs() <= 1e-10);
            }
            for w in s.sigma().windows(2) {
                assert!(w[0] >= w[1]);
            }
            assert!(s.sigma().iter().all(|v| *v > 0.0));
        }
        assert_eq!(s.absorbed(), 9);
    }

    #[test]
    fn from_parts_rejects_broken_invariants() {
        let cols = vec![e(0, 3), e(0, 3)];
        assert!(SubspaceSummary::from_parts(3, 2, cols, vec![2.0, 1.0], 2).is_err());
        let cols = vec![e(0, 3)];
        assert!(SubspaceSummary::from_parts(3, 2, cols.clone(), vec![-1.0], 1).is_err());
        assert!(SubspaceSummary::from_parts(3, 2, cols.clone(), vec![1.0, 2.0], 1).is_err());
        assert!(SubspaceSummary::from_parts(3, 2, cols, vec![1.0], 1).is_ok());
    }
}
