//! Unitarily invariant norms of Hermitian matrices.

use serde::{Deserialize, Serialize};

use super::hermitian::HermitianMatrix;
use crate::error::{Error, Result};

/// Schatten exponents supported by [`schatten_norm`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SchattenP {
    One,
    Two,
    Infinity,
}

/// Singular values of a Hermitian matrix (absolute eigenvalues), nonincreasing.
pub fn singular_values(a: &HermitianMatrix) -> Result<Vec<f64>> {
    Ok(singular_values_from_eigenvalues(&a.eigenvalues_desc()?))
}

pub fn singular_values_from_eigenvalues(eigenvalues: &[f64]) -> Vec<f64> {
    let mut s: Vec<f64> = eigenvalues.iter().map(|x| x.abs()).collect();
    s.sort_by(|x, y| y.total_cmp(x));
    s
}

/// Sum of the `k` largest singular values, `1 <= k <= n`.
pub fn ky_fan_norm(a: &HermitianMatrix, k: usize) -> Result<f64> {
    ky_fan_from_singular_values(&singular_values(a)?, k)
}

pub fn ky_fan_from_singular_values(singular: &[f64], k: usize) -> Result<f64> {
    if k == 0 || k > singular.len() {
        return Err(Error::BadIndex { index: k, dim: singular.len() });
    }
    Ok(singular[..k].iter().sum())
}

pub fn schatten_norm(a: &HermitianMatrix, p: SchattenP) -> Result<f64> {
    Ok(schatten_from_singular_values(&singular_values(a)?, p))
}

pub fn schatten_from_singular_values(singular: &[f64], p: SchattenP) -> f64 {
    match p {
        SchattenP::One => singular.iter().sum(),
        SchattenP::Two => singular.iter().map(|s| s * s).sum::<f64>().sqrt(),
        SchattenP::Infinity => singular.first().copied().unwrap_or(0.0),
    }
}
