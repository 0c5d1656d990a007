//! Matrix functions computed through the spectral decomposition.

use super::hermitian::{HermitianMatrix, PositiveDefiniteMatrix, SpectralDecomposition};
use crate::error::{Error, Result};

/// `V f(Λ) V*`. Fails with [`Error::Domain`] when `f` is not finite at some
/// eigenvalue.
pub fn apply_function(a: &HermitianMatrix, f: impl Fn(f64) -> f64) -> Result<HermitianMatrix> {
    let spectral = a.decompose()?.map(f)?;
    Ok(spectral.reconstruct())
}

/// `A^r` for real `r`; `power(A, 0) = I` and `power(A, 1) = A`.
pub fn power(a: &PositiveDefiniteMatrix, r: f64) -> Result<PositiveDefiniteMatrix> {
    if !r.is_finite() {
        return Err(Error::InvalidParameter(format!("exponent {r}")));
    }
    if r == 1.0 {
        return Ok(a.clone());
    }
    if r == 0.0 {
        return Ok(PositiveDefiniteMatrix::identity(a.dim()));
    }
    PositiveDefiniteMatrix::from_spectral(a.spectral().map(|x| x.powf(r))?)
}

/// Eigenvalues of `A^r` without forming the matrix.
pub fn power_eigenvalues(a: &PositiveDefiniteMatrix, r: f64) -> Vec<f64> {
    let mut vals: Vec<f64> = a.eigenvalues().iter().map(|x| x.powf(r)).collect();
    vals.sort_by(|x, y| y.total_cmp(x));
    vals
}

pub fn inverse(a: &PositiveDefiniteMatrix) -> Result<PositiveDefiniteMatrix> {
    a.check_condition()?;
    power(a, -1.0)
}

/// `e^H`.
pub fn exp_h(h: &HermitianMatrix) -> Result<PositiveDefiniteMatrix> {
    exp_from_spectral(&h.decompose()?)
}

/// `e^{c·H}` reusing an existing decomposition of `H`.
pub(crate) fn exp_from_spectral(spectral: &SpectralDecomposition) -> Result<PositiveDefiniteMatrix> {
    PositiveDefiniteMatrix::from_spectral(spectral.map(f64::exp)?)
}

/// Principal logarithm of a positive definite matrix.
pub fn log_pd(a: &PositiveDefiniteMatrix) -> Result<HermitianMatrix> {
    Ok(a.spectral().map(f64::ln)?.reconstruct())
}
