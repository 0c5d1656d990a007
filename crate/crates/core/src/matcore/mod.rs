//! Hermitian / positive definite matrix types, the Jacobi eigensolver and
//! spectral matrix functions.
//!
//! Every matrix function goes through [`SpectralDecomposition`]; there is no
//! Padé or Schur route.

mod functions;
mod hermitian;
mod jacobi;
mod literal;
mod matrix;
mod norms;

pub(crate) use functions::exp_from_spectral;
pub use functions::{apply_function, exp_h, inverse, log_pd, power, power_eigenvalues};
pub(crate) use hermitian::check_dims;
pub use hermitian::{HermitianMatrix, PositiveDefiniteMatrix, SpectralDecomposition, HERMITIAN_REJECT, MAX_CONDITION};
pub use jacobi::{MAX_SWEEPS, OFF_TOLERANCE};
pub use literal::MatrixLiteral;
pub use matrix::Matrix;
pub use norms::{
    ky_fan_from_singular_values, ky_fan_norm, schatten_from_singular_values, schatten_norm, singular_values,
    singular_values_from_eigenvalues, SchattenP,
};

/// Trace of an arbitrary square matrix.
pub fn trace(a: &Matrix) -> num_complex::Complex64 {
    a.trace()
}
