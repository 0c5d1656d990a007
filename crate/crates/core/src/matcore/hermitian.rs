use num_complex::Complex64;

use super::jacobi::jacobi_eigen;
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// Relative Hermiticity defect accepted by [`HermitianMatrix::new`].
pub const HERMITIAN_REJECT: f64 = 1e-8;

/// Square complex matrix equal to its conjugate transpose.
///
/// Construction symmetrizes the input, so the stored entries are exactly
/// Hermitian; the defect of the raw input is kept for diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    entries: Matrix,
    defect: f64,
}

impl HermitianMatrix {
    /// Returns `(raw + raw*) / 2`, rejecting input whose defect exceeds
    /// `1e-8 · max|entry|`.
    pub fn new(raw: Matrix) -> Result<Self> {
        if !raw.is_square() {
            return Err(Error::NonSquare { rows: raw.rows(), cols: raw.cols() });
        }
        if raw.rows() == 0 {
            return Err(Error::InvalidParameter("dimension must be at least 1".into()));
        }
        let defect = raw.hermitian_defect();
        let threshold = HERMITIAN_REJECT * raw.max_abs();
        if defect > threshold {
            return Err(Error::NotHermitian { defect, threshold });
        }
        Ok(Self { entries: symmetrize(&raw), defect })
    }

    /// Symmetrizes without the defect check; for results that are Hermitian
    /// in exact arithmetic.
    pub(crate) fn from_matrix_unchecked(raw: &Matrix) -> Self {
        debug_assert!(raw.is_square());
        Self { entries: symmetrize(raw), defect: 0.0 }
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        Self::new(Matrix::from_real_rows(rows)?)
    }

    pub fn diagonal(diag: &[f64]) -> Self {
        Self { entries: Matrix::from_diagonal(diag), defect: 0.0 }
    }

    pub fn identity(n: usize) -> Self {
        Self { entries: Matrix::identity(n), defect: 0.0 }
    }

    pub fn zeros(n: usize) -> Self {
        Self { entries: Matrix::zeros(n, n), defect: 0.0 }
    }

    pub fn dim(&self) -> usize {
        self.entries.rows()
    }

    pub fn as_matrix(&self) -> &Matrix {
        &self.entries
    }

    pub fn into_matrix(self) -> Matrix {
        self.entries
    }

    /// Hermiticity defect of the raw input this matrix was built from.
    pub fn defect(&self) -> f64 {
        self.defect
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.frobenius_norm()
    }

    pub fn trace(&self) -> f64 {
        self.entries.trace().re
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_dims(self.dim(), other.dim())?;
        Ok(Self::from_matrix_unchecked(&self.entries.add(&other.entries)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        check_dims(self.dim(), other.dim())?;
        Ok(Self::from_matrix_unchecked(&self.entries.sub(&other.entries)))
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self { entries: self.entries.scale(factor), defect: 0.0 }
    }

    /// `a·self + b·other`.
    pub fn combine(&self, a: f64, other: &Self, b: f64) -> Result<Self> {
        check_dims(self.dim(), other.dim())?;
        Ok(Self::from_matrix_unchecked(&self.entries.scale(a).add(&other.entries.scale(b))))
    }

    /// `T · self · T*` for any (possibly rectangular) `T` with matching columns.
    pub fn congruence(&self, t: &Matrix) -> Result<Self> {
        check_dims(t.cols(), self.dim())?;
        let out = t.matmul(&self.entries).matmul(&t.adjoint());
        Ok(Self::from_matrix_unchecked(&out))
    }

    /// Spectral decomposition via cyclic complex Jacobi.
    pub fn decompose(&self) -> Result<SpectralDecomposition> {
        let (values, vectors) = jacobi_eigen(&self.entries)?;
        Ok(SpectralDecomposition::sorted(values, vectors))
    }

    /// Eigenvalues in nonincreasing order.
    pub fn eigenvalues_desc(&self) -> Result<Vec<f64>> {
        Ok(self.decompose()?.eigenvalues)
    }
}

fn symmetrize(raw: &Matrix) -> Matrix {
    let n = raw.rows();
    Matrix::from_fn(n, n, |i, j| {
        if i == j {
            Complex64::new(raw[(i, i)].re, 0.0)
        } else {
            (raw[(i, j)] + raw[(j, i)].conj()) * 0.5
        }
    })
}

pub(crate) fn check_dims(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::DimMismatch { left, right });
    }
    Ok(())
}

/// Eigenvalues sorted nonincreasing with the unitary whose columns are the
/// matching eigenvectors.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Matrix,
}

impl SpectralDecomposition {
    pub(crate) fn sorted(values: Vec<f64>, vectors: Matrix) -> Self {
        let n = values.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| values[j].total_cmp(&values[i]));
        let eigenvalues = order.iter().map(|&i| values[i]).collect();
        let eigenvectors = Matrix::from_fn(n, n, |r, c| vectors[(r, order[c])]);
        Self { eigenvalues, eigenvectors }
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// `V diag(values) V*`.
    pub fn compose(&self, values: &[f64]) -> HermitianMatrix {
        let n = self.dim();
        let v = &self.eigenvectors;
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let mut acc = Complex64::new(0.0, 0.0);
                for (k, &lambda) in values.iter().enumerate() {
                    acc += v[(i, k)] * v[(j, k)].conj() * lambda;
                }
                out[(i, j)] = acc;
                out[(j, i)] = acc.conj();
            }
        }
        HermitianMatrix::from_matrix_unchecked(&out)
    }

    pub fn reconstruct(&self) -> HermitianMatrix {
        self.compose(&self.eigenvalues)
    }

    /// Applies `f` to each eigenvalue, keeping the eigenvectors; the result
    /// is re-sorted so it stays a valid decomposition.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> Result<Self> {
        let values: Vec<f64> = self
            .eigenvalues
            .iter()
            .map(|&x| {
                let y = f(x);
                if y.is_finite() {
                    Ok(y)
                } else {
                    Err(Error::Domain(format!("f({x}) = {y}")))
                }
            })
            .collect::<Result<_>>()?;
        Ok(Self::sorted(values, self.eigenvectors.clone()))
    }

    /// `‖V*V - I‖_F`.
    pub fn orthogonality_defect(&self) -> f64 {
        let v = &self.eigenvectors;
        v.adjoint().matmul(v).sub(&Matrix::identity(self.dim())).frobenius_norm()
    }
}

/// Largest condition number accepted by inversions and fractional powers
/// feeding the geometric mean.
pub const MAX_CONDITION: f64 = 1e12;

/// Hermitian matrix with strictly positive spectrum, carried together with
/// its spectral decomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct PositiveDefiniteMatrix {
    matrix: HermitianMatrix,
    spectral: SpectralDecomposition,
}

impl PositiveDefiniteMatrix {
    pub fn new(matrix: HermitianMatrix) -> Result<Self> {
        let spectral = matrix.decompose()?;
        let min = *spectral.eigenvalues.last().expect("dim >= 1");
        if min <= 0.0 || !min.is_finite() {
            return Err(Error::NotPositiveDefinite { min_eigenvalue: min });
        }
        Ok(Self { matrix, spectral })
    }

    /// Builds from a known decomposition; the matrix is recomposed from it.
    pub fn from_spectral(spectral: SpectralDecomposition) -> Result<Self> {
        let min = *spectral.eigenvalues.last().ok_or_else(|| Error::InvalidParameter("empty spectrum".into()))?;
        if min <= 0.0 || !min.is_finite() {
            return Err(Error::NotPositiveDefinite { min_eigenvalue: min });
        }
        let matrix = spectral.reconstruct();
        Ok(Self { matrix, spectral })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            matrix: HermitianMatrix::identity(n),
            spectral: SpectralDecomposition { eigenvalues: vec![1.0; n], eigenvectors: Matrix::identity(n) },
        }
    }

    pub fn diagonal(diag: &[f64]) -> Result<Self> {
        Self::new(HermitianMatrix::diagonal(diag))
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn hermitian(&self) -> &HermitianMatrix {
        &self.matrix
    }

    pub fn as_matrix(&self) -> &Matrix {
        self.matrix.as_matrix()
    }

    pub fn spectral(&self) -> &SpectralDecomposition {
        &self.spectral
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.spectral.eigenvalues
    }

    pub fn min_eigenvalue(&self) -> f64 {
        *self.spectral.eigenvalues.last().expect("dim >= 1")
    }

    pub fn max_eigenvalue(&self) -> f64 {
        self.spectral.eigenvalues[0]
    }

    pub fn condition_number(&self) -> f64 {
        self.max_eigenvalue() / self.min_eigenvalue()
    }

    pub(crate) fn check_condition(&self) -> Result<()> {
        let cond = self.condition_number();
        if cond > MAX_CONDITION {
            return Err(Error::Cond { cond, limit: MAX_CONDITION });
        }
        Ok(())
    }

    /// `c · self` for `c > 0`; the decomposition is reused.
    pub fn scale(&self, c: f64) -> Result<Self> {
        if !(c > 0.0 && c.is_finite()) {
            return Err(Error::NonPositive { name: "scale", value: c });
        }
        Ok(Self {
            matrix: self.matrix.scale(c),
            spectral: SpectralDecomposition {
                eigenvalues: self.spectral.eigenvalues.iter().map(|x| x * c).collect(),
                eigenvectors: self.spectral.eigenvectors.clone(),
            },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn make_hermitian_keeps_hermitian_input() {
        let h = HermitianMatrix::from_real_rows(&[vec![2.0, 1.0], vec![1.0, 3.0]]).unwrap();
        assert_eq!(h.as_matrix(), &Matrix::from_real_rows(&[vec![2.0, 1.0], vec![1.0, 3.0]]).unwrap());
        assert_eq!(h.defect(), 0.0);

        let pauli = Matrix::from_rows(&[vec![c(0.0, 0.0), c(0.0, 1.0)], vec![c(0.0, -1.0), c(0.0, 0.0)]]).unwrap();
        let h = HermitianMatrix::new(pauli.clone()).unwrap();
        assert_eq!(h.as_matrix(), &pauli);
    }

    #[test]
    fn make_hermitian_rejects_large_defect() {
        let raw = Matrix::from_rows(&[vec![c(1.0, 0.0), c(1.0, 1e-3)], vec![c(1.0, 0.0), c(1.0, 0.0)]]).unwrap();
        assert!(matches!(HermitianMatrix::new(raw), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn make_hermitian_symmetrizes_small_defect() {
        let raw = Matrix::from_real_rows(&[vec![1.0, 2.0 + 1e-12], vec![2.0, 1.0]]).unwrap();
        let h = HermitianMatrix::new(raw).unwrap();
        assert_eq!(h.as_matrix()[(0, 1)], h.as_matrix()[(1, 0)].conj());
        assert!(h.defect() > 0.0);
    }

    #[test]
    fn non_square_rejected() {
        let raw = Matrix::zeros(2, 3);
        assert_eq!(HermitianMatrix::new(raw), Err(Error::NonSquare { rows: 2, cols: 3 }));
    }

    #[test]
    fn diagonal_decomposition_is_trivial() {
        let d = HermitianMatrix::diagonal(&[3.0, 1.0]).decompose().unwrap();
        assert_eq!(d.eigenvalues, vec![3.0, 1.0]);
        assert_eq!(d.eigenvectors, Matrix::identity(2));
    }

    #[test]
    fn two_by_two_matches_quadratic_formula() {
        // λ = ((a+d) ± sqrt((a-d)^2 + 4b^2)) / 2 with a = d = 2, b = 1
        let vals =
            HermitianMatrix::from_real_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap().eigenvalues_desc().unwrap();
        assert!((vals[0] - 3.0).abs() < 1e-14);
        assert!((vals[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn eigenvalues_sorted_descending() {
        let vals = HermitianMatrix::diagonal(&[1.0, 5.0, 3.0]).eigenvalues_desc().unwrap();
        assert_eq!(vals, vec![5.0, 3.0, 1.0]);
    }

    #[test]
    fn positive_definite_rejects_singular() {
        let err = PositiveDefiniteMatrix::diagonal(&[1.0, 0.0]).unwrap_err();
        assert!(matches!(err, Error::NotPositiveDefinite { .. }));
    }
}
