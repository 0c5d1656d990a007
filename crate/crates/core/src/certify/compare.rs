//! Scalar comparisons between the factors of the different reverse bounds.

use serde::{Deserialize, Serialize};

use super::kantorovich::kantorovich_root_factor;
use crate::constants::{fm_factor, ln_kantorovich_exp, ln_specht_exp};
use crate::error::{Error, Result};
use crate::means::check_alpha;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FactorComparison {
    pub first: f64,
    pub second: f64,
    /// `first - second`.
    pub difference: f64,
}

impl FactorComparison {
    fn new(first: f64, second: f64) -> Self {
        Self { first, second, difference: first - second }
    }
}

fn check_h(h: f64) -> Result<()> {
    if h >= 1.0 && h.is_finite() {
        Ok(())
    } else {
        Err(Error::BadRange(format!("h = {h} must be >= 1")))
    }
}

fn check_positive(name: &'static str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositive { name, value })
    }
}

/// `K(h^{2p}, α)^{-1/p}` against `exp(α(1-α)(1-1/h^p)²/p)`.
pub fn compare_constants_remark(alpha: f64, p: f64, h: f64) -> Result<FactorComparison> {
    check_alpha(alpha)?;
    check_positive("p", p)?;
    check_h(h)?;
    let kantorovich_side = kantorovich_root_factor(2.0 * p * h.ln(), alpha, p)?;
    let fm_side = fm_factor(h.powf(p), alpha, 1.0 / p)?;
    Ok(FactorComparison::new(kantorovich_side, fm_side))
}

/// `S(h)^r` against `exp(rα(1-α)(1-1/h)²)`.
pub fn compare_specht_vs_fm(alpha: f64, r: f64, h: f64) -> Result<FactorComparison> {
    check_alpha(alpha)?;
    check_positive("r", r)?;
    check_h(h)?;
    let specht_side = (r * ln_specht_exp(h.ln())).exp();
    Ok(FactorComparison::new(specht_side, fm_factor(h, alpha, r)?))
}

/// One grid point of [`specht_fm_scan`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScanPoint {
    pub alpha: f64,
    pub r: f64,
    pub h: f64,
    pub comparison: FactorComparison,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SignScan {
    pub points: Vec<ScanPoint>,
    /// Largest positive difference, if any.
    pub positive_witness: Option<ScanPoint>,
    /// Most negative difference, if any.
    pub negative_witness: Option<ScanPoint>,
}

impl SignScan {
    pub fn has_sign_change(&self) -> bool {
        self.positive_witness.is_some() && self.negative_witness.is_some()
    }
}

/// Default `(α, r, h)` grid for [`specht_fm_scan`].
pub fn default_scan_grid() -> (Vec<f64>, Vec<f64>, Vec<f64>) {
    let alphas = vec![0.1, 0.25, 0.5, 0.75, 0.9];
    let rs = vec![0.25, 0.5, 0.75, 1.0];
    let hs = vec![1.1, 1.5, 2.0, 3.0, 5.0, 10.0, 30.0, 100.0];
    (alphas, rs, hs)
}

/// Evaluates [`compare_specht_vs_fm`] over a grid and keeps the extreme
/// points of each sign.
pub fn specht_fm_scan(alphas: &[f64], rs: &[f64], hs: &[f64]) -> Result<SignScan> {
    let mut points = Vec::with_capacity(alphas.len() * rs.len() * hs.len());
    for &alpha in alphas {
        for &r in rs {
            for &h in hs {
                points.push(ScanPoint { alpha, r, h, comparison: compare_specht_vs_fm(alpha, r, h)? });
            }
        }
    }
    let pick = |sign: f64| {
        points
            .iter()
            .filter(|p| sign * p.comparison.difference > 0.0)
            .max_by(|a, b| (sign * a.comparison.difference).total_cmp(&(sign * b.comparison.difference)))
            .copied()
    };
    let positive_witness = pick(1.0);
    let negative_witness = pick(-1.0);
    Ok(SignScan { points, positive_witness, negative_witness })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeoComparison {
    /// `K(e^{2p(M-m)}, α)^{-1/p}`.
    pub new_constant: f64,
    /// `K(e^{M-m}, p)^{-α/p} K(e^{2p(M-m)}, α)^{-1/p}`.
    pub product_constant: f64,
    /// `new_constant / product_constant`.
    pub ratio: f64,
}

/// The single-factor bounded Kantorovich constant against the two-factor
/// product constant, for `0 < p <= 1`.
pub fn compare_seo_constants(alpha: f64, p: f64, m: f64, big_m: f64) -> Result<SeoComparison> {
    check_alpha(alpha)?;
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::InvalidParameter(format!("p = {p} outside (0, 1]")));
    }
    if !(m.is_finite() && big_m.is_finite() && m <= big_m) {
        return Err(Error::InvalidParameter(format!("need m <= M, got m = {m}, M = {big_m}")));
    }
    let d = big_m - m;
    let ln_new = ln_kantorovich_exp(2.0 * p * d, alpha)? / -p;
    let ln_extra = -alpha / p * ln_kantorovich_exp(d, p)?;
    Ok(SeoComparison {
        new_constant: ln_new.exp(),
        product_constant: (ln_new + ln_extra).exp(),
        ratio: (-ln_extra).exp(),
    })
}
