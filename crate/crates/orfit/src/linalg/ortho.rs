use super::dense::DenseVector;
use super::EPS_ZERO;
use crate::error::{Error, Result};

/// Default relative tolerance for discarding a residual in
/// [`gram_schmidt_append`]: the candidate is dropped when its residual
/// norm is at most `tol * (1 + ||v||)`.
pub const GS_DEFAULT_TOL: f64 = 1e-10;

/// Removes from `g` its components along each basis vector:
/// `g - sum_v (v.g / v.v) v`.
///
/// The basis is expected to be pairwise orthogonal but need not be
/// normalized. Basis vectors with norm at or below [`EPS_ZERO`] are
/// rejected rather than divided by.
pub fn project_onto_complement(g: &DenseVector, basis: &[DenseVector]) -> Result<DenseVector> {
    let mut out = g.clone();
    project_in_place(&mut out, basis)?;
    Ok(out)
}

pub(crate) fn project_in_place(g: &mut DenseVector, basis: &[DenseVector]) -> Result<()> {
    for (index, v) in basis.iter().enumerate() {
        if v.len() != g.len() {
            return Err(Error::DimensionMismatch {
                context: "projection basis vector",
                expected: g.len(),
                got: v.len(),
            });
        }
        let norm_sq = v.norm_sq();
        if norm_sq.sqrt() <= EPS_ZERO {
            return Err(Error::DegenerateBasis {
                index,
                norm: norm_sq.sqrt(),
                floor: EPS_ZERO,
            });
        }
        let coeff = v.dot(g) / norm_sq;
        g.add_scaled(-coeff, v);
    }
    Ok(())
}

/// Orthogonalizes `v` against `basis` and decides whether the residual
/// is worth keeping.
///
/// Returns `Ok(Some(residual))` when the residual norm exceeds
/// `tol * (1 + ||v||)`, `Ok(None)` when `v` is numerically inside the
/// span. The projection is applied twice; a single pass can leave a
/// residual with O(eps * ||v|| / ||r||) relative contamination along the
/// basis, and the second pass removes it ("twice is enough").
pub fn gram_schmidt_append(
    basis: &[DenseVector],
    v: &DenseVector,
    tol: f64,
) -> Result<Option<DenseVector>> {
    let mut r = v.clone();
    project_in_place(&mut r, basis)?;
    project_in_place(&mut r, basis)?;
    if r.norm() > tol * (1.0 + v.norm()) {
        Ok(Some(r))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn vec3(a: f64, b: f64, c: f64) -> DenseVector {
        DenseVector::new(vec![a, b, c]).unwrap()
    }

    #[test]
    fn empty_basis_is_identity() {
        let g = vec3(1.0, 2.0, 3.0);
        let p = project_onto_complement(&g, &[]).unwrap();
        assert_eq!(p, g);
    }

    #[test]
    fn removes_component_along_unnormalized_basis() {
        let g = vec3(1.0, 2.0, 3.0);
        let basis = [vec3(0.0, 2.0, 0.0)];
        let p = project_onto_complement(&g, &basis).unwrap();
        assert_eq!(p.as_slice(), &[1.0, 0.0, 3.0]);
    }

    #[test]
    fn vector_inside_span_projects_to_zero() {
        let g = vec3(2.0, 2.0, 0.0);
        let basis = [vec3(1.0, 0.0, 0.0), vec3(0.0, 1.0, 0.0)];
        let p = project_onto_complement(&g, &basis).unwrap();
        assert!(p.norm() <= 1e-15);
    }

    #[test]
    fn rejects_degenerate_basis_vector() {
        let g = vec3(1.0, 0.0, 0.0);
        let tiny = vec3(1e-13, 0.0, 0.0);
        let err = project_onto_complement(&g, &[tiny]).unwrap_err();
        assert!(matches!(err, Error::DegenerateBasis { index: 0, .. }));
    }

    #[test]
    fn append_keeps_novel_direction() {
        let basis = [vec3(1.0, 0.0, 0.0)];
        let v = vec3(1.0, 1.0, 0.0);
        let r = gram_schmidt_append(&basis, &v, GS_DEFAULT_TOL)
            .unwrap()
            .expect("novel direction kept");
        assert!(r.max_abs_diff(&vec3(0.0, 1.0, 0.0)) < 1e-15);
    }

    #[test]
    fn append_drops_vector_inside_span() {
        let basis = [vec3(1.0, 0.0, 0.0), vec3(0.0, 3.0, 0.0)];
        let v = vec3(5.0, -2.0, 0.0);
        assert!(gram_schmidt_append(&basis, &v, GS_DEFAULT_TOL)
            .unwrap()
            .is_none());
    }

    #[test]
    fn append_to_empty_basis_returns_copy() {
        let v = vec3(0.0, 4.0, 3.0);
        let r = gram_schmidt_append(&[], &v, GS_DEFAULT_TOL)
            .unwrap()
            .expect("nonzero vector kept");
        assert_eq!(r, v);
    }

    #[test]
    fn reorthogonalization_cleans_near_parallel_input() {
        // v is a basis direction plus a 1e-9 perpendicular whisker; one
        // projection pass alone would leave relative contamination along
        // the basis comparable to eps * ||v|| / ||r||.
        let basis = [vec3(1.0, 0.0, 0.0)];
        let v = vec3(1.0, 1e-9, 0.0);
        let r = gram_schmidt_append(&basis, &v, GS_DEFAULT_TOL)
            .unwrap()
            .expect("whisker survives");
        let contamination = r.dot(&basis[0]).abs() / (r.norm() * basis[0].norm());
        assert!(contamination < 1e-12, "contamination {contamination}");
    }

    proptest! {
        #[test]
        fn projection_is_idempotent_and_contractive(
            entries in proptest::collection::vec(-100.0f64..100.0, 6),
            basis_raw in proptest::collection::vec(-10.0f64..10.0, 12),
        ) {
            let g = DenseVector::new(entries).unwrap();
            // Orthogonalize two raw vectors to get a valid basis.
            let b0 = DenseVector::new(basis_raw[..6].to_vec()).unwrap();
            let b1 = DenseVector::new(basis_raw[6..].to_vec()).unwrap();
            let mut basis = Vec::new();
            if let Some(r) = gram_schmidt_append(&basis, &b0, GS_DEFAULT_TOL).unwrap() {
                basis.push(r);
            }
            if let Some(r) = gram_schmidt_append(&basis, &b1, GS_DEFAULT_TOL).unwrap() {
                basis.push(r);
            }
            let p1 = project_onto_complement(&g, &basis).unwrap();
            let p2 = project_onto_complement(&p1, &basis).unwrap();
            prop_assert!(p1.norm() <= g.norm() * (1.0 + 1e-12) + 1e-12);
            prop_assert!(p2.max_abs_diff(&p1) <= 1e-9 * (1.0 + g.norm()));
        }

        #[test]
        fn appended_residual_is_orthogonal(
            raw in proptest::collection::vec(-50.0f64..50.0, 24),
        ) {
            let mut basis: Vec<DenseVector> = Vec::new();
            for chunk in raw.chunks(6) {
                let v = DenseVector::new(chunk.to_vec()).unwrap();
                if let Some(r) = gram_schmidt_append(&basis, &v, GS_DEFAULT_TOL).unwrap() {
                    for b in &basis {
                        let cos = r.dot(b).abs() / (r.norm() * b.norm());
                        prop_assert!(cos <= 1e-10, "cosine {cos}");
                    }
                    basis.push(r);
                }
            }
        }
    }
}
