//! Numerical toolkit for reversed Golden–Thompson bounds on small matrices.
//!
//! The crate is organised bottom-up:
//!
//! * [`matcore`]: Hermitian and positive definite matrices, a complex cyclic
//!   Jacobi eigensolver, and every matrix function computed through the
//!   spectral decomposition.
//! * [`means`]: the weighted geometric mean `A #_α B`, the log-Euclidean
//!   point `exp((1-α)H + αK)` and the small-exponent limit probe.
//! * [`constants`]: Specht ratio, generalized Kantorovich constant and the
//!   exponential FM factor `exp(α(1-α)(1 - 1/h)²)`.
//! * [`orders`]: Loewner order, sandwich bounds, Olson order and
//!   (weak) log-majorization certificates.
//! * [`sampling`]: seeded samplers that produce matrices satisfying each
//!   hypothesis by construction.
//! * [`certify`]: one certifier per inequality plus constant comparisons,
//!   convergence tables and seeded campaigns.

pub mod certify;
pub mod constants;
pub mod error;
pub mod matcore;
pub mod means;
pub mod orders;
pub mod sampling;

pub use error::{Error, Result};
pub use matcore::{HermitianMatrix, Matrix, MatrixLiteral, PositiveDefiniteMatrix, SchattenP, SpectralDecomposition};
