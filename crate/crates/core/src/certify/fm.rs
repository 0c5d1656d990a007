//! Reverse inequalities with the FM exponential factor.
//!
//! All forms need an ordered chain below the identity, so `M <= 1` for the
//! matrix forms and `M <= 0` for the exponential one.

use serde::{Deserialize, Serialize};

use super::forms::{self, check_exponent, check_loewner, check_olson};
use super::report::{digest, params, Comparison, InequalityId, InequalityReport};
use crate::constants::fm_factor;
use crate::error::{Error, Result};
use crate::matcore::{check_dims, exp_h, HermitianMatrix, PositiveDefiniteMatrix};
use crate::means::check_alpha;

fn check_chain_bounds(m: f64, big_m: f64, top: f64) -> Result<()> {
    if !(m.is_finite() && m <= big_m && big_m <= top) {
        return Err(Error::InvalidParameter(format!("need m <= M <= {top}, got m = {m}, M = {big_m}")));
    }
    Ok(())
}

/// `0 < mI <= A <= B <= MI <= I`.
fn check_loewner_chain(a: &PositiveDefiniteMatrix, b: &PositiveDefiniteMatrix, m: f64, big_m: f64) -> Result<()> {
    let n = a.dim();
    check_loewner(&HermitianMatrix::identity(n).scale(m), a.hermitian(), "mI <= A")?;
    check_loewner(a.hermitian(), b.hermitian(), "A <= B")?;
    check_loewner(b.hermitian(), &HermitianMatrix::identity(n).scale(big_m), "B <= MI")
}

/// `0 < mI ⪯_ols A ⪯_ols B ⪯_ols MI ⪯_ols I`.
fn check_olson_chain(a: &PositiveDefiniteMatrix, b: &PositiveDefiniteMatrix, m: f64, big_m: f64) -> Result<()> {
    let n = a.dim();
    check_olson(&PositiveDefiniteMatrix::identity(n).scale(m)?, a, "mI ⪯_ols A")?;
    check_olson(a, b, "A ⪯_ols B")?;
    check_olson(b, &PositiveDefiniteMatrix::identity(n).scale(big_m)?, "B ⪯_ols MI")
}

/// `A^r #_α B^r <= exp(rα(1-α)(1-1/h)²) (A #_α B)^r` under
/// `0 < mI <= A <= B <= MI <= I`, `h = M/m`, `0 < r <= 1`.
pub fn certify_fm_low(
    a: &PositiveDefiniteMatrix,
    b: &PositiveDefiniteMatrix,
    m: f64,
    big_m: f64,
    alpha: f64,
    r: f64,
) -> Result<InequalityReport> {
    check_dims(a.dim(), b.dim())?;
    check_chain_bounds(m, big_m, 1.0)?;
    if m <= 0.0 {
        return Err(Error::NonPositive { name: "m", value: m });
    }
    check_alpha(alpha)?;
    check_exponent("r", r, 0.0, 1.0, true)?;
    check_loewner_chain(a, b, m, big_m)?;
    let h = big_m / m;
    let factor = fm_factor(h, alpha, r)?;
    Ok(forms::power_low(a, b, alpha, r, factor)?.into_report(
        InequalityId::FmPowerLow,
        Comparison::Loewner,
        params(&[("alpha", alpha), ("r", r), ("m", m), ("M", big_m), ("h", h)]),
        factor,
        digest(&[a.as_matrix(), b.as_matrix()], &[m, big_m, alpha, r]),
    ))
}

/// Exponents of the eigenvalue forms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "form")]
pub enum FmExponents {
    /// `λ_k(A #_α B)^r <= exp(α(1-α)(1-1/h^r)²) λ_k(A^r #_α B^r)`, `r >= 1`.
    High { r: f64 },
    /// `λ_k(A^q #_α B^q)^{1/q} <= exp(α(1-α)(1-1/h^p)²/p) λ_k(A^p #_α B^p)^{1/p}`.
    Pair { q: f64, p: f64 },
}

/// Eigenvalue forms under `0 < mI ⪯_ols A ⪯_ols B ⪯_ols MI ⪯_ols I`.
pub fn certify_fm_eigen(
    a: &PositiveDefiniteMatrix,
    b: &PositiveDefiniteMatrix,
    m: f64,
    big_m: f64,
    alpha: f64,
    exponents: FmExponents,
) -> Result<InequalityReport> {
    check_dims(a.dim(), b.dim())?;
    check_chain_bounds(m, big_m, 1.0)?;
    if m <= 0.0 {
        return Err(Error::NonPositive { name: "m", value: m });
    }
    check_alpha(alpha)?;
    match exponents {
        FmExponents::High { r } => check_exponent("r", r, 1.0, f64::INFINITY, false)?,
        FmExponents::Pair { q, p } => {
            check_exponent("q", q, 0.0, f64::INFINITY, true)?;
            check_exponent("p", p, q, f64::INFINITY, false)?;
        }
    }
    check_olson_chain(a, b, m, big_m)?;
    let h = big_m / m;
    let d = digest(&[a.as_matrix(), b.as_matrix()], &[m, big_m, alpha]);
    match exponents {
        FmExponents::High { r } => {
            let factor = fm_factor(h.powf(r), alpha, 1.0)?;
            Ok(forms::eigen_high(a, b, alpha, r, factor)?.into_report(
                InequalityId::FmEigenHigh,
                Comparison::Eigenvalue,
                params(&[("alpha", alpha), ("r", r), ("m", m), ("M", big_m), ("h", h)]),
                factor,
                d,
            ))
        }
        FmExponents::Pair { q, p } => {
            let factor = fm_factor(h.powf(p), alpha, 1.0 / p)?;
            Ok(forms::power_pair(a, b, alpha, q, p, factor)?.into_report(
                InequalityId::FmPowerPair,
                Comparison::Eigenvalue,
                params(&[("alpha", alpha), ("p", p), ("q", q), ("m", m), ("M", big_m), ("h", h)]),
                factor,
                d,
            ))
        }
    }
}

/// `λ_k(e^{(1-α)H+αK}) <= exp(α(1-α)(1-e^{-p(M-m)})²/p) λ_k(e^{pH} #_α e^{pK})^{1/p}`
/// under `e^m I ⪯_ols e^H ⪯_ols e^K ⪯_ols e^M I ⪯_ols I`, which forces `M <= 0`.
pub fn certify_fm_gt(
    h: &HermitianMatrix,
    k: &HermitianMatrix,
    m: f64,
    big_m: f64,
    alpha: f64,
    p: f64,
) -> Result<InequalityReport> {
    check_dims(h.dim(), k.dim())?;
    check_chain_bounds(m, big_m, 0.0)?;
    check_alpha(alpha)?;
    check_exponent("p", p, 0.0, f64::INFINITY, true)?;
    let eh = exp_h(h)?;
    let ek = exp_h(k)?;
    check_olson_chain(&eh, &ek, m.exp(), big_m.exp())?;
    // 1 - 1/e^{p(M-m)} = -expm1(-p(M-m))
    let d = -(-p * (big_m - m)).exp_m1();
    let factor = (alpha * (1.0 - alpha) * d * d / p).exp();
    Ok(forms::gt_eigen(h, k, alpha, p, factor)?.into_report(
        InequalityId::GtFm,
        Comparison::Eigenvalue,
        params(&[("alpha", alpha), ("p", p), ("m", m), ("M", big_m)]),
        factor,
        digest(&[h.as_matrix(), k.as_matrix()], &[m, big_m, alpha, p]),
    ))
}
