use thiserror::Error;

/// Errors raised by the matrix kernels, constants, samplers and certifiers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian: defect {defect:e} exceeds {threshold:e}")]
    NotHermitian { defect: f64, threshold: f64 },

    #[error("Jacobi iteration did not converge within {sweeps} sweeps (off-diagonal mass {off:e})")]
    NoConvergence { sweeps: usize, off: f64 },

    #[error("function undefined on the spectrum: {0}")]
    Domain(String),

    #[error("matrix is not positive definite (smallest eigenvalue {min_eigenvalue:e})")]
    NotPositiveDefinite { min_eigenvalue: f64 },

    #[error("index {index} out of range 1..={dim}")]
    BadIndex { index: usize, dim: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },

    #[error("condition number {cond:e} exceeds limit {limit:e}")]
    Cond { cond: f64, limit: f64 },

    #[error("empty sequence")]
    EmptySequence,

    #[error("{name} must be positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },

    #[error("bad range: {0}")]
    BadRange(String),

    #[error("bad Olson grid: {0}")]
    BadGrid(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("identity pre-check failed: {0}")]
    IdentityCheck(String),

    #[error("malformed matrix literal: {0}")]
    Literal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
