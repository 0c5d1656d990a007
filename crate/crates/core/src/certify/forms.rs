//! Shared left/right-hand sides. The Specht, bounded and FM
//! variants differ only in their factor and hypothesis, so each shape is
//! evaluated once here.

use super::report::{Entries, NormId};
use crate::error::{Error, Result};
use crate::matcore::{
    exp_h, ky_fan_norm, power, power_eigenvalues, schatten_norm, HermitianMatrix, PositiveDefiniteMatrix,
};
use crate::means::{geometric_mean, log_euclidean, mean_eigenvalues, mean_power};
use crate::orders::{loewner_leq, olson_leq, DEFAULT_OLSON_GRID};

pub(crate) fn require(condition: bool, what: impl FnOnce() -> String) -> Result<()> {
    if condition {
        Ok(())
    } else {
        Err(Error::HypothesisViolated(what()))
    }
}

pub(crate) fn check_exponent(name: &str, value: f64, lo: f64, hi: f64, lo_open: bool) -> Result<()> {
    let ok = value.is_finite() && value <= hi && if lo_open { value > lo } else { value >= lo };
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{name} = {value} outside its admissible range")))
    }
}

pub(crate) fn check_loewner(a: &HermitianMatrix, b: &HermitianMatrix, what: &str) -> Result<()> {
    let c = loewner_leq(a, b)?;
    require(c.holds, || format!("{what} (margin {:e})", c.worst_margin))
}

pub(crate) fn check_olson(a: &PositiveDefiniteMatrix, b: &PositiveDefiniteMatrix, what: &str) -> Result<()> {
    let c = olson_leq(a, b, &DEFAULT_OLSON_GRID)?;
    require(c.holds, || format!("{what} (margin {:e} at {})", c.worst_margin, c.witness))
}

/// `mI <= X <= MI`.
pub(crate) fn check_spectrum_bounds(x: &HermitianMatrix, m: f64, big_m: f64, name: &str) -> Result<()> {
    let n = x.dim();
    check_loewner(&HermitianMatrix::identity(n).scale(m), x, &format!("{m}·I <= {name}"))?;
    check_loewner(x, &HermitianMatrix::identity(n).scale(big_m), &format!("{name} <= {big_m}·I"))
}

fn spectral_norm(x: &HermitianMatrix) -> Result<f64> {
    let v = x.eigenvalues_desc()?;
    Ok(v[0].abs().max(v[v.len() - 1].abs()))
}

/// `X <= Y` entries: eigenvalues of `Y - X` against zero, scaled by
/// `max(‖X‖_2, ‖Y‖_2)`.
pub(crate) fn loewner_entries(x: &HermitianMatrix, y: &HermitianMatrix) -> Result<Entries> {
    let mut diff = y.sub(x)?.eigenvalues_desc()?;
    diff.reverse();
    let scale = spectral_norm(x)?.max(spectral_norm(y)?);
    let n = diff.len();
    let labels = (1..=n).map(|i| format!("mu_{i}(rhs - lhs)")).collect();
    Ok(Entries::with_scales(labels, vec![0.0; n], diff, vec![scale; n]))
}

/// `A^r #_α B^r <= factor · (A #_α B)^r` for `0 < r <= 1`.
pub(crate) fn power_low(
    a: &PositiveDefiniteMatrix,
    b: &PositiveDefiniteMatrix,
    alpha: f64,
    r: f64,
    factor: f64,
) -> Result<Entries> {
    let lhs = geometric_mean(&power(a, r)?, &power(b, r)?, alpha)?;
    let rhs = power(&geometric_mean(a, b, alpha)?, r)?.scale(factor)?;
    loewner_entries(lhs.hermitian(), rhs.hermitian())
}

/// `λ_k(A #_α B)^r <= factor · λ_k(A^r #_α B^r)` for `r >= 1`.
pub(crate) fn eigen_high(
    a: &PositiveDefiniteMatrix,
    b: &PositiveDefiniteMatrix,
    alpha: f64,
    r: f64,
    factor: f64,
) -> Result<Entries> {
    let lhs = power_eigenvalues(&geometric_mean(a, b, alpha)?, r);
    let base = geometric_mean(&power(a, r)?, &power(b, r)?, alpha)?;
    let rhs = base.eigenvalues().iter().map(|x| factor * x).collect();
    Ok(Entries::eigen(lhs, rhs))
}

/// `λ_k(A^q #_α B^q)^{1/q} <= factor · λ_k(A^p #_α B^p)^{1/p}` for `0 < q <= p`.
pub(crate) fn power_pair(
    a: &PositiveDefiniteMatrix,
    b: &PositiveDefiniteMatrix,
    alpha: f64,
    q: f64,
    p: f64,
    factor: f64,
) -> Result<Entries> {
    let lhs = power_eigenvalues(&geometric_mean(&power(a, q)?, &power(b, q)?, alpha)?, 1.0 / q);
    let base = geometric_mean(&power(a, p)?, &power(b, p)?, alpha)?;
    let rhs = power_eigenvalues(&base, 1.0 / p).into_iter().map(|x| factor * x).collect();
    Ok(Entries::eigen(lhs, rhs))
}

/// `λ_k(e^{(1-α)H+αK}) <= factor · λ_k(e^{pH} #_α e^{pK})^{1/p}`.
pub(crate) fn gt_eigen(h: &HermitianMatrix, k: &HermitianMatrix, alpha: f64, p: f64, factor: f64) -> Result<Entries> {
    let lhs = log_euclidean(h, k, alpha)?.eigenvalues().to_vec();
    let rhs = mean_eigenvalues(h, k, alpha, p)?.into_iter().map(|x| factor * x.powf(1.0 / p)).collect();
    Ok(Entries::eigen(lhs, rhs))
}

/// `λ_k(e^{H+K}) <= factor · λ_k(e^{2H} # e^{2K})`.
pub(crate) fn gt_squared_eigen(h: &HermitianMatrix, k: &HermitianMatrix, factor: f64) -> Result<Entries> {
    let lhs = exp_h(&h.add(k)?)?.eigenvalues().to_vec();
    let rhs = mean_eigenvalues(h, k, 0.5, 2.0)?.into_iter().map(|x| factor * x).collect();
    Ok(Entries::eigen(lhs, rhs))
}

pub(crate) fn norm_value(x: &HermitianMatrix, norm: NormId) -> Result<f64> {
    match norm {
        NormId::KyFan(k) => ky_fan_norm(x, k),
        NormId::Schatten(p) => schatten_norm(x, p),
    }
}

/// `‖X‖ <= factor · ‖Y‖` for each norm, with norms computed from the
/// matrices themselves.
pub(crate) fn norm_entries(x: &HermitianMatrix, y: &HermitianMatrix, factor: f64, norms: &[NormId]) -> Result<Entries> {
    let mut lhs = Vec::with_capacity(norms.len());
    let mut rhs = Vec::with_capacity(norms.len());
    for &norm in norms {
        lhs.push(norm_value(x, norm)?);
        rhs.push(factor * norm_value(y, norm)?);
    }
    Ok(Entries::new(norms.iter().map(|n| n.label()).collect(), lhs, rhs))
}

/// `‖e^{(1-α)H+αK}‖ <= factor · ‖(e^{pH} #_α e^{pK})^{1/p}‖`.
pub(crate) fn gt_norm(
    h: &HermitianMatrix,
    k: &HermitianMatrix,
    alpha: f64,
    p: f64,
    factor: f64,
    norms: &[NormId],
) -> Result<Entries> {
    let x = log_euclidean(h, k, alpha)?;
    let y = mean_power(h, k, alpha, p)?;
    norm_entries(x.hermitian(), y.hermitian(), factor, norms)
}

pub(crate) fn check_norms(norms: &[NormId], n: usize) -> Result<()> {
    if norms.is_empty() {
        return Err(Error::InvalidParameter("no norms selected".into()));
    }
    for norm in norms {
        if let NormId::KyFan(k) = *norm {
            if k == 0 || k > n {
                return Err(Error::BadIndex { index: k, dim: n });
            }
        }
    }
    Ok(())
}
