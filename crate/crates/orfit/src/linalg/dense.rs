use crate::error::{Error, Result};

/// Fixed-length column vector of finite `f64` entries.
///
/// The length is set at construction and never changes; constructors
/// reject NaN and infinite entries so downstream arithmetic can assume
/// finite inputs.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseVector {
    data: Vec<f64>,
}

impl DenseVector {
    /// Wraps `data`, rejecting empty input and non-finite entries.
    pub fn new(data: Vec<f64>) -> Result<Self> {
        if data.is_empty() {
            return Err(Error::ContractViolation(
                "vector must have at least one entry".into(),
            ));
        }
        if let Some(i) = data.iter().position(|x| !x.is_finite()) {
            return Err(Error::ContractViolation(format!(
                "non-finite entry {} at position {i}",
                data[i]
            )));
        }
        Ok(Self { data })
    }

    /// All-zero vector of length `len`.
    pub fn zeros(len: usize) -> Self {
        assert!(len > 0, "vector length must be positive");
        Self {
            data: vec![0.0; len],
        }
    }

    /// Builds entry `i` as `f(i)`.
    pub fn from_fn(len: usize, f: impl FnMut(usize) -> f64) -> Self {
        assert!(len > 0, "vector length must be positive");
        Self {
            data: (0..len).map(f).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        false // length is always positive by construction
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub(crate) fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn iter(&self) -> std::slice::Iter<'_, f64> {
        self.data.iter()
    }

    pub fn dot(&self, other: &DenseVector) -> f64 {
        debug_assert_eq!(self.len(), other.len(), "dot of mismatched lengths");
        self.data.iter().zip(&other.data).map(|(a, b)| a * b).sum()
    }

    pub fn norm_sq(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// `self += alpha * other`, in place.
    pub fn add_scaled(&mut self, alpha: f64, other: &DenseVector) {
        debug_assert_eq!(self.len(), other.len(), "add_scaled mismatched lengths");
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += alpha * b;
        }
    }

    /// `self *= alpha`, in place.
    pub fn scale(&mut self, alpha: f64) {
        for a in &mut self.data {
            *a *= alpha;
        }
    }

    /// Returns `alpha * self` as a new vector.
    pub fn scaled(&self, alpha: f64) -> DenseVector {
        let mut out = self.clone();
        out.scale(alpha);
        out
    }

    /// Returns `self - other` as a new vector.
    pub fn minus(&self, other: &DenseVector) -> DenseVector {
        let mut out = self.clone();
        out.add_scaled(-1.0, other);
        out
    }

    /// Largest absolute entry of `self - other`.
    pub fn max_abs_diff(&self, other: &DenseVector) -> f64 {
        debug_assert_eq!(self.len(), other.len());
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }
}

impl std::ops::Index<usize> for DenseVector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.data[i]
    }
}

/// Row-major dense matrix with positive dimensions and finite entries.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    /// Wraps a row-major entry buffer; dimensions must be positive and
    /// match the buffer length, entries must be finite.
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::ContractViolation(
                "matrix dimensions must be positive".into(),
            ));
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                context: "matrix entry buffer",
                expected: rows * cols,
                got: data.len(),
            });
        }
        if let Some(i) = data.iter().position(|x| !x.is_finite()) {
            return Err(Error::ContractViolation(format!(
                "non-finite entry {} at flat position {i}",
                data[i]
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    /// Diagonal matrix from `diag`.
    pub fn from_diagonal(diag: &[f64]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, d) in diag.iter().enumerate() {
            m.data[i * n + i] = *d;
        }
        m
    }

    /// Stacks `columns` left to right; all must share a length.
    pub fn from_columns(columns: &[DenseVector]) -> Result<Self> {
        let Some(first) = columns.first() else {
            return Err(Error::ContractViolation(
                "from_columns needs at least one column".into(),
            ));
        };
        let rows = first.len();
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch {
                    context: "from_columns column length",
                    expected: rows,
                    got: columns[j].len(),
                });
            }
        }
        let cols = columns.len();
        let mut data = vec![0.0; rows * cols];
        for (j, c) in columns.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                data[i * cols + j] = *x;
            }
        }
        Ok(Self { rows, cols, data })
    }

    /// Stacks `rows` top to bottom; all must share a length.
    pub fn from_rows(rows: &[DenseVector]) -> Result<Self> {
        let Some(first) = rows.first() else {
            return Err(Error::ContractViolation(
                "from_rows needs at least one row".into(),
            ));
        };
        let cols = first.len();
        for r in rows.iter() {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    context: "from_rows row length",
                    expected: cols,
                    got: r.len(),
                });
            }
        }
        let data = rows.iter().flat_map(|r| r.iter().copied()).collect();
        Self::new(rows.len(), cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: f64) {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.cols + c] = value;
    }

    pub(crate) fn row_slice(&self, r: usize) -> &[f64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub(crate) fn row_slice_mut(&mut self, r: usize) -> &mut [f64] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> DenseVector {
        debug_assert!(c < self.cols);
        DenseVector {
            data: (0..self.rows).map(|r| self.get(r, c)).collect(),
        }
    }

    pub fn transpose(&self) -> DenseMatrix {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        out
    }

    /// `self * x`.
    pub fn matvec(&self, x: &DenseVector) -> Result<DenseVector> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                context: "matvec operand",
                expected: self.cols,
                got: x.len(),
            });
        }
        let mut out = vec![0.0; self.rows];
        for (r, o) in out.iter_mut().enumerate() {
            let row = self.row_slice(r);
            *o = row.iter().zip(x.iter()).map(|(a, b)| a * b).sum();
        }
        Ok(DenseVector { data: out })
    }

    /// `self^T * x`.
    pub fn tr_matvec(&self, x: &DenseVector) -> Result<DenseVector> {
        if x.len() != self.rows {
            return Err(Error::DimensionMismatch {
                context: "tr_matvec operand",
                expected: self.rows,
                got: x.len(),
            });
        }
        let mut out = vec![0.0; self.cols];
        for r in 0..self.rows {
            let row = self.row_slice(r);
            let xr = x[r];
            for (o, a) in out.iter_mut().zip(row) {
                *o += a * xr;
            }
        }
        Ok(DenseVector { data: out })
    }

    /// `self * other`.
    pub fn matmul(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                context: "matmul inner dimension",
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k];
                if a == 0.0 {
                    continue;
                }
                let orow = other.row_slice(k);
                let dst = out.row_slice_mut(r);
                for (d, b) in dst.iter_mut().zip(orow) {
                    *d += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// Largest absolute entry of `self - other`.
    pub fn max_abs_diff(&self, other: &DenseMatrix) -> f64 {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    /// Solves `self * x = b` for square `self` by LU with partial pivoting.
    pub fn solve(&self, b: &DenseVector) -> Result<DenseVector> {
        if !self.is_square() {
            return Err(Error::ContractViolation(
                "solve requires a square matrix".into(),
            ));
        }
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                context: "solve right-hand side",
                expected: self.rows,
                got: b.len(),
            });
        }
        let n = self.rows;
        let mut a = self.data.clone();
        let mut x = b.as_slice().to_vec();
        for k in 0..n {
            let mut piv = k;
            let mut best = a[k * n + k].abs();
            for r in (k + 1)..n {
                let v = a[r * n + k].abs();
                if v > best {
                    best = v;
                    piv = r;
                }
            }
            if best < f64::MIN_POSITIVE {
                return Err(Error::DegenerateSystem(format!(
                    "zero pivot at elimination column {k} of {n}"
                )));
            }
            if piv != k {
                for c in 0..n {
                    a.swap(k * n + c, piv * n + c);
                }
                x.swap(k, piv);
            }
            let d = a[k * n + k];
            for r in (k + 1)..n {
                let f = a[r * n + k] / d;
                if f == 0.0 {
                    continue;
                }
                a[r * n + k] = 0.0;
                for c in (k + 1)..n {
                    a[r * n + c] -= f * a[k * n + c];
                }
                x[r] -= f * x[k];
            }
        }
        for k in (0..n).rev() {
            let mut s = x[k];
            for c in (k + 1)..n {
                s -= a[k * n + c] * x[c];
            }
            x[k] = s / a[k * n + k];
        }
        if x.iter().any(|v| !v.is_finite()) {
            return Err(Error::NumericalFailure(
                "solve produced non-finite solution".into(),
            ));
        }
        Ok(DenseVector { data: x })
    }

    /// Matrix inverse via `solve` against identity columns.
    pub fn inverse(&self) -> Result<DenseMatrix> {
        if !self.is_square() {
            return Err(Error::ContractViolation(
                "inverse requires a square matrix".into(),
            ));
        }
        let n = self.rows;
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let e = DenseVector::from_fn(n, |i| if i == j { 1.0 } else { 0.0 });
            cols.push(self.solve(&e)?);
        }
        DenseMatrix::from_columns(&cols)
    }
}

impl std::ops::Index<(usize, usize)> for DenseMatrix {
    type Output = f64;
    fn index(&self, (r, c): (usize, usize)) -> &f64 {
        &self.data[r * self.cols + c]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn rejects_non_finite_entries() {
        assert!(DenseVector::new(vec![1.0, f64::NAN]).is_err());
        assert!(DenseVector::new(vec![f64::INFINITY]).is_err());
        assert!(DenseVector::new(vec![]).is_err());
        assert!(DenseMatrix::new(2, 2, vec![1.0, 2.0, f64::NAN, 4.0]).is_err());
        assert!(DenseMatrix::new(0, 2, vec![]).is_err());
    }

    #[test]
    fn dot_norm_axpy() {
        let a = DenseVector::new(vec![1.0, 2.0, 2.0]).unwrap();
        let b = DenseVector::new(vec![3.0, 0.0, -1.0]).unwrap();
        assert_relative_eq!(a.dot(&b), 1.0);
        assert_relative_eq!(a.norm(), 3.0);
        let mut c = a.clone();
        c.add_scaled(2.0, &b);
        assert_eq!(c.as_slice(), &[7.0, 2.0, 0.0]);
    }

    #[test]
    fn matvec_and_transpose() {
        let m = DenseMatrix::new(2, 3, vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0]).unwrap();
        let x = DenseVector::new(vec![1.0, 0.0, -1.0]).unwrap();
        assert_eq!(m.matvec(&x).unwrap().as_slice(), &[-2.0, -2.0]);
        let y = DenseVector::new(vec![1.0, 1.0]).unwrap();
        assert_eq!(m.tr_matvec(&y).unwrap().as_slice(), &[5.0, 7.0, 9.0]);
        let t = m.transpose();
        assert_eq!((t.rows(), t.cols()), (3, 2));
        assert_eq!(t.get(2, 1), 6.0);
    }

    #[test]
    fn from_columns_round_trip() {
        let c0 = DenseVector::new(vec![1.0, 3.0]).unwrap();
        let c1 = DenseVector::new(vec![2.0, 4.0]).unwrap();
        let m = DenseMatrix::from_columns(&[c0.clone(), c1]).unwrap();
        assert_eq!(m.get(1, 0), 3.0);
        assert_eq!(m.column(0), c0);
    }

    #[test]
    fn solve_small_system() {
        // [2 1; 1 3] x = [3; 5] has solution x = (4/5, 7/5).
        let m = DenseMatrix::new(2, 2, vec![2.0, 1.0, 1.0, 3.0]).unwrap();
        let b = DenseVector::new(vec![3.0, 5.0]).unwrap();
        let x = m.solve(&b).unwrap();
        assert_relative_eq!(x[0], 0.8, max_relative = 1e-14);
        assert_relative_eq!(x[1], 1.4, max_relative = 1e-14);
    }

    #[test]
    fn solve_rejects_singular() {
        let m = DenseMatrix::new(2, 2, vec![1.0, 2.0, 2.0, 4.0]).unwrap();
        let b = DenseVector::new(vec![1.0, 1.0]).unwrap();
        assert!(matches!(m.solve(&b), Err(Error::DegenerateSystem(_))));
    }

    #[test]
    fn inverse_matches_identity() {
        let m = DenseMatrix::new(3, 3, vec![4.0, 1.0, 0.0, 1.0, 3.0, 1.0, 0.0, 1.0, 2.0]).unwrap();
        let inv = m.inverse().unwrap();
        let prod = m.matmul(&inv).unwrap();
        assert!(prod.max_abs_diff(&DenseMatrix::identity(3)) < 1e-12);
    }
}
