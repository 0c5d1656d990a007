//! Scalar constants appearing in the reverse inequalities.
//!
//! * Specht ratio `S(t) = (t-1) t^{1/(t-1)} / (e log t)`, `S(1) = 1`.
//! * Generalized Kantorovich constant
//!   `K(w, α) = (w^α - w) / ((α-1)(w-1)) · ((α-1)/α · (w^α-1)/(w^α-w))^α`.
//! * FM factor `exp(scale · α(1-α)(1 - 1/h)²)`.
//!
//! Both `S` and `K` are evaluated in the log domain through `u = ln t`
//! (resp. `ln w`) and `expm1`, which keeps full relative accuracy when the
//! argument is close to 1. That matters for the `p`-th root limits, where
//! `ln S` and `ln K` are divided by a small `p`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Below this distance from 1 the Specht ratio switches to its series.
pub const SPECHT_SERIES_RADIUS: f64 = 1e-6;
/// Distance from `α ∈ {0, 1}` (and from `w = 1`) where the Kantorovich
/// constant switches to its limit branch.
pub const KANTOROVICH_LIMIT_RADIUS: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstantName {
    Specht,
    SpechtRoot,
    Kantorovich,
    KantorovichLowerBound,
    FmFactor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    Direct,
    Series,
    Limit,
}

/// A constant value together with the evaluation path that produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstantEval {
    pub name: ConstantName,
    pub arguments: Vec<f64>,
    pub value: f64,
    pub branch: Branch,
}

fn positive(name: &'static str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositive { name, value })
    }
}

fn unit_interval(name: &str, value: f64) -> Result<()> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{name} = {value} outside [0, 1]")))
    }
}

/// `ln S(e^u)` and the branch used.
fn ln_specht_of_log(u: f64) -> (f64, Branch) {
    // |t - 1| < radius  <=>  |expm1(u)| < radius
    if u.exp_m1().abs() < SPECHT_SERIES_RADIUS {
        let u2 = u * u;
        (u2 / 8.0 - u2 * u2 / 576.0, Branch::Series)
    } else {
        let em1 = u.exp_m1();
        ((em1 / u).ln() + u / em1 - 1.0, Branch::Direct)
    }
}

pub fn specht_eval(t: f64) -> Result<ConstantEval> {
    positive("t", t)?;
    let (ln_s, branch) = ln_specht_of_log(t.ln());
    Ok(ConstantEval { name: ConstantName::Specht, arguments: vec![t], value: ln_s.exp(), branch })
}

/// Specht ratio `S(t)`, `t > 0`.
pub fn specht(t: f64) -> Result<f64> {
    specht_eval(t).map(|e| e.value)
}

/// `ln S(t)`; exact zero at `t = 1`.
pub fn ln_specht(t: f64) -> Result<f64> {
    positive("t", t)?;
    Ok(ln_specht_of_log(t.ln()).0)
}

/// `ln S(e^x)` for real `x`; lets callers avoid forming `e^x` explicitly.
pub fn ln_specht_exp(x: f64) -> f64 {
    ln_specht_of_log(x).0
}

/// `S(t^p)^{1/p}`.
pub fn specht_p_root(t: f64, p: f64) -> Result<f64> {
    positive("t", t)?;
    positive("p", p)?;
    Ok((ln_specht_of_log(p * t.ln()).0 / p).exp())
}

/// First-order coefficient of `ln K(e^u, α)` at `α = 0` (and, by symmetry of
/// the expansion, in `1 - α` at `α = 1`): `1 - L + ln L`, `L = u / (e^u - 1)`.
fn kantorovich_edge_slope(u: f64) -> f64 {
    let l = u / u.exp_m1();
    1.0 - l + l.ln()
}

/// `ln K(e^u, α)` and the branch used.
fn ln_kantorovich_of_log(u: f64, alpha: f64) -> Result<(f64, Branch)> {
    if u.exp_m1().abs() < KANTOROVICH_LIMIT_RADIUS || alpha == 0.0 || alpha == 1.0 {
        return Ok((0.0, Branch::Limit));
    }
    if alpha.abs() < KANTOROVICH_LIMIT_RADIUS {
        return Ok((kantorovich_edge_slope(u) * alpha, Branch::Limit));
    }
    if (alpha - 1.0).abs() < KANTOROVICH_LIMIT_RADIUS {
        return Ok((kantorovich_edge_slope(u) * (1.0 - alpha), Branch::Limit));
    }
    // w^α - w = -w^α · expm1((1-α)u);  w - 1 = expm1(u);  w^α - 1 = expm1(αu)
    let w_alpha = (alpha * u).exp();
    let diff = -w_alpha * ((1.0 - alpha) * u).exp_m1();
    let first = diff / ((alpha - 1.0) * u.exp_m1());
    let inner = (alpha - 1.0) / alpha * (alpha * u).exp_m1() / diff;
    if !(first > 0.0 && inner > 0.0) {
        return Err(Error::Domain(format!("K(e^{u}, {alpha}) has non-positive factors ({first}, {inner})")));
    }
    Ok((first.ln() + alpha * inner.ln(), Branch::Direct))
}

pub fn kantorovich_eval(w: f64, alpha: f64) -> Result<ConstantEval> {
    positive("w", w)?;
    if !alpha.is_finite() {
        return Err(Error::InvalidParameter(format!("alpha = {alpha}")));
    }
    let (ln_k, branch) = ln_kantorovich_of_log(w.ln(), alpha)?;
    Ok(ConstantEval { name: ConstantName::Kantorovich, arguments: vec![w, alpha], value: ln_k.exp(), branch })
}

/// Generalized Kantorovich constant `K(w, α)` for `w > 0` and real `α`.
pub fn kantorovich(w: f64, alpha: f64) -> Result<f64> {
    kantorovich_eval(w, alpha).map(|e| e.value)
}

/// `ln K(e^x, α)`.
pub fn ln_kantorovich_exp(x: f64, alpha: f64) -> Result<f64> {
    if !x.is_finite() || !alpha.is_finite() {
        return Err(Error::InvalidParameter(format!("x = {x}, alpha = {alpha}")));
    }
    Ok(ln_kantorovich_of_log(x, alpha)?.0)
}

/// `2 w^{1/4} / (w^{1/2} + 1)`, a lower bound of `K(w, α)` for `α ∈ [0, 1]`.
pub fn kantorovich_lower_bound(w: f64) -> Result<f64> {
    positive("w", w)?;
    Ok(2.0 * w.powf(0.25) / (w.sqrt() + 1.0))
}

/// `K(w^p, α)^{-1/p}` for each `p` of a strictly descending positive sequence.
pub fn kantorovich_limit_root(w: f64, alpha: f64, p_sequence: &[f64]) -> Result<Vec<f64>> {
    positive("w", w)?;
    if p_sequence.is_empty() {
        return Err(Error::EmptySequence);
    }
    check_descending(p_sequence)?;
    let u = w.ln();
    p_sequence.iter().map(|&p| Ok((-ln_kantorovich_of_log(p * u, alpha)?.0 / p).exp())).collect()
}

pub(crate) fn check_descending(seq: &[f64]) -> Result<()> {
    if let Some(bad) = seq.iter().find(|&&x| !(x > 0.0 && x.is_finite())) {
        return Err(Error::NonPositive { name: "sequence entry", value: *bad });
    }
    if seq.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::InvalidParameter("sequence must be strictly descending".into()));
    }
    Ok(())
}

/// `exp(scale · α(1-α)(1 - 1/h)²)` for `h >= 1`, `α ∈ [0, 1]`, `scale > 0`.
///
/// The scale is `r` for the Loewner form, `1/p` for the eigenvalue forms.
pub fn fm_factor(h: f64, alpha: f64, scale: f64) -> Result<f64> {
    if !(h >= 1.0 && h.is_finite()) {
        return Err(Error::BadRange(format!("h = {h} must be >= 1")));
    }
    unit_interval("alpha", alpha)?;
    positive("scale", scale)?;
    let d = 1.0 - 1.0 / h;
    Ok((scale * alpha * (1.0 - alpha) * d * d).exp())
}

/// Outcome of Specht's scalar reverse AM–GM inequality for one list.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AmGmCheck {
    pub arithmetic_mean: f64,
    pub specht_bound: f64,
    pub margin: f64,
}

/// Arithmetic mean versus `S(x_max / x_min)` times the geometric mean.
pub fn scalar_specht_amgm_check(xs: &[f64]) -> Result<AmGmCheck> {
    if xs.is_empty() {
        return Err(Error::EmptySequence);
    }
    for &x in xs {
        positive("x", x)?;
    }
    let n = xs.len() as f64;
    let max = xs.iter().copied().fold(f64::MIN, f64::max);
    let min = xs.iter().copied().fold(f64::MAX, f64::min);
    let arithmetic_mean = xs.iter().sum::<f64>() / n;
    let geometric_mean = (xs.iter().map(|x| x.ln()).sum::<f64>() / n).exp();
    let specht_bound = specht(max / min)? * geometric_mean;
    Ok(AmGmCheck { arithmetic_mean, specht_bound, margin: specht_bound - arithmetic_mean })
}
