use super::dense::{DenseMatrix, DenseVector};
use crate::error::{Error, Result};

/// Full singular value decomposition `M = U * diag(sigma) * V^T`.
#[derive(Debug, Clone)]
pub struct Svd {
    /// Orthonormal left factor, one column per singular value.
    pub u: DenseMatrix,
    /// Singular values, descending, all non-negative.
    pub sigma: Vec<f64>,
    /// Orthonormal right factor.
    pub v: DenseMatrix,
}

const JACOBI_TOL: f64 = 1e-15;
const MAX_SWEEPS: usize = 64;

/// SVD of a small square matrix by one-sided cyclic Jacobi rotations.
///
/// Columns of a working copy are rotated in pairs until every pair is
/// orthogonal relative to its own scale, which bounds the loss of
/// orthogonality in `U` independently of conditioning. Ties among equal
/// singular values keep the earlier column first, so a diagonal input
/// yields an exact signed-permutation `U` and `V`. Zero columns receive
/// synthesized orthonormal completions and an exact zero singular value.
///
/// Intended for matrices of small side (at most a memory cap plus one);
/// cost grows cubically with the side.
pub fn svd_small(m: &DenseMatrix) -> Result<Svd> {
    if !m.is_square() {
        return Err(Error::ContractViolation(format!(
            "svd_small requires a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let mut a: Vec<Vec<f64>> = (0..n)
        .map(|j| (0..n).map(|i| m.get(i, j)).collect())
        .collect();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|j| (0..n).map(|i| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let mut alpha = 0.0;
                let mut beta = 0.0;
                let mut gamma = 0.0;
                for (&api, &aqi) in a[p].iter().zip(&a[q]) {
                    alpha += api * api;
                    beta += aqi * aqi;
                    gamma += api * aqi;
                }
                if gamma.abs() <= JACOBI_TOL * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                rotate_pair(&mut a, p, q, c, s);
                rotate_pair(&mut v, p, q, c, s);
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NumericalFailure(format!(
            "jacobi sweep limit {MAX_SWEEPS} reached on {n}x{n} input"
        )));
    }

    // Extract singular values and left vectors. A column with a single
    // nonzero entry is resolved exactly so that diagonal inputs come out
    // as bitwise signed permutations.
    let mut sigma = vec![0.0; n];
    let mut u: Vec<Option<Vec<f64>>> = vec![None; n];
    for j in 0..n {
        let nonzero: Vec<usize> = (0..n).filter(|&i| a[j][i] != 0.0).collect();
        match nonzero.len() {
            0 => {
                sigma[j] = 0.0;
            }
            1 => {
                let i = nonzero[0];
                let x = a[j][i];
                sigma[j] = x.abs();
                let mut col = vec![0.0; n];
                col[i] = x.signum();
                u[j] = Some(col);
            }
            _ => {
                let norm = a[j].iter().map(|x| x * x).sum::<f64>().sqrt();
                if norm < 1e-300 {
                    sigma[j] = 0.0;
                } else {
                    sigma[j] = norm;
                    u[j] = Some(a[j].iter().map(|x| x / norm).collect());
                }
            }
        }
    }

    // Stable descending order; equal values keep the earlier column first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| sigma[j].total_cmp(&sigma[i]).then(i.cmp(&j)));
    let sigma_sorted: Vec<f64> = order.iter().map(|&j| sigma[j]).collect();
    let mut u_sorted: Vec<Option<Vec<f64>>> = order.iter().map(|&j| u[j].take()).collect();
    let v_sorted: Vec<Vec<f64>> = order.iter().map(|&j| v[j].clone()).collect();

    // Complete zero columns with unit vectors orthogonal to the rest.
    for j in 0..n {
        if u_sorted[j].is_some() {
            continue;
        }
        u_sorted[j] = Some(complete_column(&u_sorted, n));
    }

    let u_cols: Vec<DenseVector> = u_sorted
        .into_iter()
        .map(|c| DenseVector::new(c.expect("all columns filled")))
        .collect::<Result<_>>()?;
    let v_cols: Vec<DenseVector> = v_sorted
        .into_iter()
        .map(DenseVector::new)
        .collect::<Result<_>>()?;
    Ok(Svd {
        u: DenseMatrix::from_columns(&u_cols)?,
        sigma: sigma_sorted,
        v: DenseMatrix::from_columns(&v_cols)?,
    })
}

fn rotate_pair(cols: &mut [Vec<f64>], p: usize, q: usize, c: f64, s: f64) {
    for i in 0..cols[p].len() {
        let x = cols[p][i];
        let y = cols[q][i];
        cols[p][i] = c * x - s * y;
        cols[q][i] = s * x + c * y;
    }
}

/// Picks the canonical direction with the largest residual against the
/// filled columns, orthogonalizes it twice, and normalizes.
fn complete_column(filled: &[Option<Vec<f64>>], n: usize) -> Vec<f64> {
    let mut best: Option<(f64, Vec<f64>)> = None;
    for k in 0..n {
        let mut cand = vec![0.0; n];
        cand[k] = 1.0;
        for _ in 0..2 {
            for col in filled.iter().flatten() {
                let coeff: f64 = cand.iter().zip(col).map(|(a, b)| a * b).sum();
                for (c, b) in cand.iter_mut().zip(col) {
                    *c -= coeff * b;
                }
            }
        }
        let norm = cand.iter().map(|x| x * x).sum::<f64>().sqrt();
        if best.as_ref().is_none_or(|(b, _)| norm > *b) {
            best = Some((norm, cand));
        }
    }
    let (norm, mut col) = best.expect("n > 0");
    for c in &mut col {
        *c /= norm;
    }
    col
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn reconstruct(svd: &Svd) -> DenseMatrix {
        let s = DenseMatrix::from_diagonal(&svd.sigma);
        svd.u
            .matmul(&s)
            .unwrap()
            .matmul(&svd.v.transpose())
            .unwrap()
    }

    fn orthogonality_error(m: &DenseMatrix) -> f64 {
        let gram = m.transpose().matmul(m).unwrap();
        gram.max_abs_diff(&DenseMatrix::identity(m.cols()))
    }

    #[test]
    fn diagonal_input_sorts_with_exact_permutation_factors() {
        let m = DenseMatrix::from_diagonal(&[3.0, 1.0, 2.0]);
        let svd = svd_small(&m).unwrap();
        assert_eq!(svd.sigma, vec![3.0, 2.0, 1.0]);
        // U and V are the exact permutation sending (0,2,1) -> (0,1,2).
        let expected = [(0usize, 0usize), (1, 2), (2, 1)];
        for (col, row) in expected {
            assert_eq!(svd.u.get(row, col), 1.0);
            assert_eq!(svd.v.get(row, col), 1.0);
        }
        assert_eq!(reconstruct(&svd), m);
    }

    #[test]
    fn identity_is_fixed_point_with_tie_kept_in_order() {
        let m = DenseMatrix::identity(2);
        let svd = svd_small(&m).unwrap();
        assert_eq!(svd.sigma, vec![1.0, 1.0]);
        assert_eq!(svd.u, DenseMatrix::identity(2));
        assert_eq!(svd.v, DenseMatrix::identity(2));
    }

    #[test]
    fn antidiagonal_example() {
        let m = DenseMatrix::new(2, 2, vec![0.0, 2.0, 1.0, 0.0]).unwrap();
        let svd = svd_small(&m).unwrap();
        assert_eq!(svd.sigma, vec![2.0, 1.0]);
        assert_eq!(reconstruct(&svd), m);
        assert!(orthogonality_error(&svd.u) < 1e-12);
        assert!(orthogonality_error(&svd.v) < 1e-12);
    }

    #[test]
    fn rank_deficient_column_is_completed() {
        let m = DenseMatrix::new(2, 2, vec![1.0, 0.0, 0.0, 0.0]).unwrap();
        let svd = svd_small(&m).unwrap();
        assert_eq!(svd.sigma, vec![1.0, 0.0]);
        assert!(orthogonality_error(&svd.u) < 1e-14);
        assert_eq!(reconstruct(&svd), m);
    }

    #[test]
    fn one_by_one() {
        let m = DenseMatrix::new(1, 1, vec![-4.0]).unwrap();
        let svd = svd_small(&m).unwrap();
        assert_eq!(svd.sigma, vec![4.0]);
        assert_eq!(svd.u.get(0, 0), -1.0);
        assert_eq!(svd.v.get(0, 0), 1.0);
    }

    #[test]
    fn rejects_non_square() {
        let m = DenseMatrix::zeros(2, 3);
        assert!(matches!(svd_small(&m), Err(Error::ContractViolation(_))));
    }

    #[test]
    fn known_two_by_two_against_hand_computed_values() {
        // M = [[3, 0], [4, 5]]: M^T M = [[25, 20], [20, 25]] has
        // eigenvalues 25 ± 20, so the singular values are sqrt(45)
        // and sqrt(5).
        let m = DenseMatrix::new(2, 2, vec![3.0, 0.0, 4.0, 5.0]).unwrap();
        let svd = svd_small(&m).unwrap();
        assert!((svd.sigma[0] - 45.0f64.sqrt()).abs() < 1e-14);
        assert!((svd.sigma[1] - 5.0f64.sqrt()).abs() < 1e-14);
        assert!(reconstruct(&svd).max_abs_diff(&m) < 1e-14);
    }

    proptest! {
        #[test]
        fn random_matrices_reconstruct_and_stay_orthogonal(
            entries in proptest::collection::vec(-10.0f64..10.0, 25),
        ) {
            let m = DenseMatrix::new(5, 5, entries).unwrap();
            let svd = svd_small(&m).unwrap();
            let scale = m.max_abs().max(1.0);
            prop_assert!(reconstruct(&svd).max_abs_diff(&m) <= 1e-12 * scale);
            prop_assert!(orthogonality_error(&svd.u) <= 1e-12);
            prop_assert!(orthogonality_error(&svd.v) <= 1e-12);
            for w in svd.sigma.windows(2) {
                prop_assert!(w[0] >= w[1]);
            }
            prop_assert!(svd.sigma.iter().all(|s| *s >= 0.0));
        }
    }
}
