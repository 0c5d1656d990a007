//! Reverse inequalities with a Specht-ratio factor.

use serde::{Deserialize, Serialize};

use super::forms::{self, check_exponent, check_loewner, check_norms, check_olson, check_spectrum_bounds, require};
use super::report::{digest, params, Comparison, InequalityId, InequalityReport, NormId};
use crate::constants::ln_specht_exp;
use crate::error::{Error, Result};
use crate::matcore::{check_dims, HermitianMatrix, PositiveDefiniteMatrix};
use crate::means::check_alpha;
use crate::orders::{olson_leq, DEFAULT_OLSON_GRID};

/// `max{S(e^{x}), S(e^{y})}^{scale}`.
pub(crate) fn specht_max_factor(x: f64, y: f64, scale: f64) -> f64 {
    (scale * ln_specht_exp(x).max(ln_specht_exp(y))).exp()
}

fn check_scalars(s: f64, t: f64) -> Result<()> {
    if !(s > 0.0 && s <= t && t.is_finite()) {
        return Err(Error::InvalidParameter(format!("need 0 < s <= t, got s = {s}, t = {t}")));
    }
    Ok(())
}

fn check_log_scalars(s: f64, t: f64) -> Result<()> {
    if !(s.is_finite() && t.is_finite() && s <= t) {
        return Err(Error::InvalidParameter(format!("need s <= t, got s = {s}, t = {t}")));
    }
    Ok(())
}

/// `sA <= B <= tA`.
fn check_sandwich(a: &PositiveDefiniteMatrix, b: &PositiveDefiniteMatrix, s: f64, t: f64) -> Result<()> {
    check_loewner(&a.hermitian().scale(s), b.hermitian(), "sA <= B")?;
    check_loewner(b.hermitian(), &a.hermitian().scale(t), "B <= tA")
}

/// `sA ⪯_ols B ⪯_ols tA`.
pub(crate) fn check_olson_sandwich(
    a: &PositiveDefiniteMatrix,
    b: &PositiveDefiniteMatrix,
    s: f64,
    t: f64,
) -> Result<()> {
    check_olson(&a.scale(s)?, b, "sA ⪯_ols B")?;
    check_olson(b, &a.scale(t)?, "B ⪯_ols tA")
}

/// `e^s e^H ⪯_ols e^K ⪯_ols e^t e^H`.
pub(crate) fn check_exponential_sandwich(h: &HermitianMatrix, k: &HermitianMatrix, s: f64, t: f64) -> Result<()> {
    check_dims(h.dim(), k.dim())?;
    let eh = crate::matcore::exp_h(h)?;
    let ek = crate::matcore::exp_h(k)?;
    let lower = olson_leq(&eh.scale(s.exp())?, &ek, &DEFAULT_OLSON_GRID)?;
    require(lower.holds, || format!("e^s e^H ⪯_ols e^K (margin {:e} at {})", lower.worst_margin, lower.witness))?;
    let upper = olson_leq(&ek, &eh.scale(t.exp())?, &DEFAULT_OLSON_GRID)?;
    require(upper.holds, || format!("e^K ⪯_ols e^t e^H (margin {:e} at {})", upper.worst_margin, upper.witness))
}

fn pd_digest(a: &PositiveDefiniteMatrix, b: &PositiveDefiniteMatrix, scalars: &[f64]) -> String {
    digest(&[a.as_matrix(), b.as_matrix()], scalars)
}

fn h_digest(h: &HermitianMatrix, k: &HermitianMatrix, scalars: &[f64]) -> String {
    digest(&[h.as_matrix(), k.as_matrix()], scalars)
}

/// `A^r #_α B^r <= max{S(s),S(t)}^r (A #_α B)^r` under `sA <= B <= tA`,
/// `0 < r <= 1`.
pub fn certify_specht_power_low(
    a: &PositiveDefiniteMatrix,
    b: &PositiveDefiniteMatrix,
    s: f64,
    t: f64,
    alpha: f64,
    r: f64,
) -> Result<InequalityReport> {
    check_dims(a.dim(), b.dim())?;
    check_scalars(s, t)?;
    check_alpha(alpha)?;
    check_exponent("r", r, 0.0, 1.0, true)?;
    check_sandwich(a, b, s, t)?;
    let factor = specht_max_factor(s.ln(), t.ln(), r);
    let entries = forms::power_low(a, b, alpha, r, factor)?;
    Ok(entries.into_report(
        InequalityId::SpechtPowerLow,
        Comparison::Loewner,
        params(&[("alpha", alpha), ("r", r), ("s", s), ("t", t)]),
        factor,
        pd_digest(a, b, &[s, t, alpha, r]),
    ))
}

/// `λ_k(A #_α B)^r <= max{S(s^r),S(t^r)} λ_k(A^r #_α B^r)` under
/// `sA ⪯_ols B ⪯_ols tA`, `r >= 1`.
pub fn certify_eigen_power_high(
    a: &PositiveDefiniteMatrix,
    b: &PositiveDefiniteMatrix,
    s: f64,
    t: f64,
    alpha: f64,
    r: f64,
) -> Result<InequalityReport> {
    check_dims(a.dim(), b.dim())?;
    check_scalars(s, t)?;
    check_alpha(alpha)?;
    check_exponent("r", r, 1.0, f64::INFINITY, false)?;
    check_olson_sandwich(a, b, s, t)?;
    let factor = specht_max_factor(r * s.ln(), r * t.ln(), 1.0);
    let entries = forms::eigen_high(a, b, alpha, r, factor)?;
    Ok(entries.into_report(
        InequalityId::SpechtEigenHigh,
        Comparison::Eigenvalue,
        params(&[("alpha", alpha), ("r", r), ("s", s), ("t", t)]),
        factor,
        pd_digest(a, b, &[s, t, alpha, r]),
    ))
}

fn check_pq(q: f64, p: f64) -> Result<()> {
    check_exponent("q", q, 0.0, f64::INFINITY, true)?;
    check_exponent("p", p, q, f64::INFINITY, false)
}

/// `λ_k(A^q #_α B^q)^{1/q} <= max{S(s^p),S(t^p)}^{1/p} λ_k(A^p #_α B^p)^{1/p}`
/// under `sA ⪯_ols B ⪯_ols tA`, `0 < q <= p`.
pub fn certify_pq_reverse(
    a: &PositiveDefiniteMatrix,
    b: &PositiveDefiniteMatrix,
    s: f64,
    t: f64,
    alpha: f64,
    q: f64,
    p: f64,
) -> Result<InequalityReport> {
    check_dims(a.dim(), b.dim())?;
    check_scalars(s, t)?;
    check_alpha(alpha)?;
    check_pq(q, p)?;
    check_olson_sandwich(a, b, s, t)?;
    let factor = specht_max_factor(p * s.ln(), p * t.ln(), 1.0 / p);
    let entries = forms::power_pair(a, b, alpha, q, p, factor)?;
    Ok(entries.into_report(
        InequalityId::SpechtPowerPair,
        Comparison::Eigenvalue,
        params(&[("alpha", alpha), ("p", p), ("q", q), ("s", s), ("t", t)]),
        factor,
        pd_digest(a, b, &[s, t, alpha, q, p]),
    ))
}

/// Which form of the bounded-spectrum corollary to certify.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "form")]
pub enum BoundedForm {
    /// `A^r #_α B^r <= S(h)^r (A #_α B)^r`, `0 < r <= 1`.
    PowerLow { r: f64 },
    /// `λ_k(A #_α B)^r <= S(h^r) λ_k(A^r #_α B^r)`, `r >= 1`.
    EigenHigh { r: f64 },
    /// `λ_k(A^q #_α B^q)^{1/q} <= S(h^p)^{1/p} λ_k(A^p #_α B^p)^{1/p}`.
    PowerPair { q: f64, p: f64 },
}

/// Bounded forms under `mI <= A, B <= MI`, with `h = M/m`.
pub fn certify_bounded_corollary(
    a: &PositiveDefiniteMatrix,
    b: &PositiveDefiniteMatrix,
    m: f64,
    big_m: f64,
    alpha: f64,
    form: BoundedForm,
) -> Result<InequalityReport> {
    check_dims(a.dim(), b.dim())?;
    check_scalars(m, big_m)?;
    check_alpha(alpha)?;
    check_spectrum_bounds(a.hermitian(), m, big_m, "A")?;
    check_spectrum_bounds(b.hermitian(), m, big_m, "B")?;
    let ln_h = (big_m / m).ln();
    let h = big_m / m;
    let d = pd_digest(a, b, &[m, big_m, alpha]);
    match form {
        BoundedForm::PowerLow { r } => {
            check_exponent("r", r, 0.0, 1.0, true)?;
            let factor = specht_max_factor(ln_h, ln_h, r);
            Ok(forms::power_low(a, b, alpha, r, factor)?.into_report(
                InequalityId::BoundedPowerLow,
                Comparison::Loewner,
                params(&[("alpha", alpha), ("r", r), ("m", m), ("M", big_m), ("h", h)]),
                factor,
                d,
            ))
        }
        BoundedForm::EigenHigh { r } => {
            check_exponent("r", r, 1.0, f64::INFINITY, false)?;
            let factor = specht_max_factor(r * ln_h, r * ln_h, 1.0);
            Ok(forms::eigen_high(a, b, alpha, r, factor)?.into_report(
                InequalityId::BoundedEigenHigh,
                Comparison::Eigenvalue,
                params(&[("alpha", alpha), ("r", r), ("m", m), ("M", big_m), ("h", h)]),
                factor,
                d,
            ))
        }
        BoundedForm::PowerPair { q, p } => {
            check_pq(q, p)?;
            let factor = specht_max_factor(p * ln_h, p * ln_h, 1.0 / p);
            Ok(forms::power_pair(a, b, alpha, q, p, factor)?.into_report(
                InequalityId::BoundedPowerPair,
                Comparison::Eigenvalue,
                params(&[("alpha", alpha), ("p", p), ("q", q), ("m", m), ("M", big_m), ("h", h)]),
                factor,
                d,
            ))
        }
    }
}

/// `λ_k(e^{(1-α)H+αK}) <= max{S(e^{sp}),S(e^{tp})}^{1/p} λ_k(e^{pH} #_α e^{pK})^{1/p}`
/// under `e^s e^H ⪯_ols e^K ⪯_ols e^t e^H`.
pub fn certify_gt_reverse_specht(
    h: &HermitianMatrix,
    k: &HermitianMatrix,
    s: f64,
    t: f64,
    alpha: f64,
    p: f64,
) -> Result<InequalityReport> {
    check_log_scalars(s, t)?;
    check_alpha(alpha)?;
    check_exponent("p", p, 0.0, f64::INFINITY, true)?;
    check_exponential_sandwich(h, k, s, t)?;
    let factor = specht_max_factor(s * p, t * p, 1.0 / p);
    Ok(forms::gt_eigen(h, k, alpha, p, factor)?.into_report(
        InequalityId::GtSpecht,
        Comparison::Eigenvalue,
        params(&[("alpha", alpha), ("p", p), ("s", s), ("t", t)]),
        factor,
        h_digest(h, k, &[s, t, alpha, p]),
    ))
}

/// Norm form of [`certify_gt_reverse_specht`] over the selected norms.
pub fn certify_gt_reverse_norm(
    h: &HermitianMatrix,
    k: &HermitianMatrix,
    s: f64,
    t: f64,
    alpha: f64,
    p: f64,
    norms: &[NormId],
) -> Result<InequalityReport> {
    check_log_scalars(s, t)?;
    check_alpha(alpha)?;
    check_exponent("p", p, 0.0, f64::INFINITY, true)?;
    check_norms(norms, h.dim())?;
    check_exponential_sandwich(h, k, s, t)?;
    let factor = specht_max_factor(s * p, t * p, 1.0 / p);
    Ok(forms::gt_norm(h, k, alpha, p, factor, norms)?.into_report(
        InequalityId::GtSpechtNorm,
        Comparison::Norm,
        params(&[("alpha", alpha), ("p", p), ("s", s), ("t", t)]),
        factor,
        h_digest(h, k, &[s, t, alpha, p]),
    ))
}

/// `‖e^{H+K}‖ <= max{S(e^{2s}),S(e^{2t})} ‖e^{2H} # e^{2K}‖`: the weight
/// one half, `p = 2` case of the eigenvalue bound, squared.
pub fn certify_gt_specht_squared(
    h: &HermitianMatrix,
    k: &HermitianMatrix,
    s: f64,
    t: f64,
    norms: &[NormId],
) -> Result<InequalityReport> {
    check_log_scalars(s, t)?;
    check_norms(norms, h.dim())?;
    check_exponential_sandwich(h, k, s, t)?;
    let factor = specht_max_factor(2.0 * s, 2.0 * t, 1.0);
    let x = crate::matcore::exp_h(&h.add(k)?)?;
    let eh = crate::matcore::exp_h(&h.scale(2.0))?;
    let ek = crate::matcore::exp_h(&k.scale(2.0))?;
    let y = crate::means::geometric_mean(&eh, &ek, 0.5)?;
    Ok(forms::norm_entries(x.hermitian(), y.hermitian(), factor, norms)?.into_report(
        InequalityId::GtSpechtSquared,
        Comparison::Norm,
        params(&[("alpha", 0.5), ("p", 2.0), ("s", s), ("t", t)]),
        factor,
        h_digest(h, k, &[s, t]),
    ))
}

/// `λ_k(e^{(1-α)H+αK}) <= S(e^{(M-m)p})^{1/p} λ_k(e^{pH} #_α e^{pK})^{1/p}`
/// under `mI <= H, K <= MI`.
pub fn certify_gt_bounded_specht(
    h: &HermitianMatrix,
    k: &HermitianMatrix,
    m: f64,
    big_m: f64,
    alpha: f64,
    p: f64,
) -> Result<InequalityReport> {
    check_dims(h.dim(), k.dim())?;
    check_log_scalars(m, big_m)?;
    check_alpha(alpha)?;
    check_exponent("p", p, 0.0, f64::INFINITY, true)?;
    check_spectrum_bounds(h, m, big_m, "H")?;
    check_spectrum_bounds(k, m, big_m, "K")?;
    let x = (big_m - m) * p;
    let factor = specht_max_factor(x, x, 1.0 / p);
    Ok(forms::gt_eigen(h, k, alpha, p, factor)?.into_report(
        InequalityId::GtSpechtBounded,
        Comparison::Eigenvalue,
        params(&[("alpha", alpha), ("p", p), ("m", m), ("M", big_m)]),
        factor,
        h_digest(h, k, &[m, big_m, alpha, p]),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::specht;
    use crate::sampling::{Sampler, SamplerConfig, SamplingMode};

    fn sampler(mode: SamplingMode, seed: u64) -> Sampler {
        Sampler::new(SamplerConfig::new(4, seed, 0.5, 3.0, mode)).unwrap()
    }

    #[test]
    fn factor_matches_direct_specht() {
        let f = specht_max_factor(0.5f64.ln(), 2f64.ln(), 0.5);
        assert!((f - specht(2.0).unwrap().sqrt()).abs() < 1e-14);
    }

    #[test]
    fn power_low_r_one_and_alpha_zero() {
        let mut smp = sampler(SamplingMode::General, 3);
        let pair = smp.sandwich_pair(0.5, 2.0).unwrap();
        let rep = certify_specht_power_low(&pair.a, &pair.b, 0.5, 2.0, 0.5, 1.0).unwrap();
        assert!(rep.holds);
        assert!(rep.min_relative_margin() >= 0.0);
        let rep = certify_specht_power_low(&pair.a, &pair.b, 0.5, 2.0, 0.0, 0.7).unwrap();
        assert!(rep.holds);
        let rep = certify_specht_power_low(&pair.a, &pair.b, 0.5, 2.0, 0.5, 0.5).unwrap();
        assert!(rep.holds, "{rep:?}");
    }

    #[test]
    fn violated_sandwich_is_rejected() {
        let mut smp = sampler(SamplingMode::General, 4);
        let pair = smp.sandwich_pair(0.5, 2.0).unwrap();
        let err = certify_specht_power_low(&pair.a, &pair.b, 0.9, 1.1, 0.5, 0.5).unwrap_err();
        assert!(matches!(err, Error::HypothesisViolated(_)));
    }

    #[test]
    fn eigen_high_commuting_matches_scalar() {
        let a = PositiveDefiniteMatrix::diagonal(&[3.0, 1.0]).unwrap();
        let b = PositiveDefiniteMatrix::diagonal(&[2.0, 1.5]).unwrap();
        let (s, t) = (2.0 / 3.0, 1.5);
        let (alpha, r) = (0.3, 2.0);
        let rep = certify_eigen_power_high(&a, &b, s, t, alpha, r).unwrap();
        let factor = specht(s.powf(r)).unwrap().max(specht(t.powf(r)).unwrap());
        let mut lhs: Vec<f64> =
            [(3.0f64, 2.0f64), (1.0, 1.5)].iter().map(|(x, y)| (x.powf(1.0 - alpha) * y.powf(alpha)).powf(r)).collect();
        lhs.sort_by(|x, y| y.total_cmp(x));
        for (got, want) in rep.lhs_values.iter().zip(&lhs) {
            assert!((got - want).abs() < 1e-12);
        }
        for (got, want) in rep.rhs_values.iter().zip(&lhs) {
            assert!((got - factor * want).abs() < 1e-11);
        }
        assert!(rep.holds);
    }

    #[test]
    fn pq_equal_exponents_and_endpoint_weights() {
        for mode in [SamplingMode::General, SamplingMode::Commuting] {
            let mut smp = sampler(mode, 5);
            let pair = smp.olson_sandwich_pair().unwrap();
            for (alpha, q, p) in [(0.5, 1.0, 2.0), (0.4, 1.5, 1.5), (0.0, 0.5, 2.0), (1.0, 0.5, 2.0)] {
                let rep = certify_pq_reverse(&pair.a, &pair.b, pair.s, pair.t, alpha, q, p).unwrap();
                assert!(rep.holds, "{mode:?} {alpha} {q} {p}: {rep:?}");
            }
        }
    }

    #[test]
    fn bounded_forms() {
        let a = PositiveDefiniteMatrix::diagonal(&[1.0, 2.0, 1.5]).unwrap();
        let rep = certify_bounded_corollary(&a, &a, 1.0, 2.0, 0.5, BoundedForm::PowerLow { r: 0.5 }).unwrap();
        assert!(rep.holds && rep.min_relative_margin() > 0.0);
        let c = PositiveDefiniteMatrix::diagonal(&[1.5, 1.5]).unwrap();
        for form in [
            BoundedForm::PowerLow { r: 0.5 },
            BoundedForm::EigenHigh { r: 2.0 },
            BoundedForm::PowerPair { q: 1.0, p: 2.0 },
        ] {
            let rep = certify_bounded_corollary(&c, &c, 1.5, 1.5, 0.5, form).unwrap();
            assert_eq!(rep.factor, 1.0);
            assert!(rep.margins.iter().all(|m| m.abs() < 1e-10));
        }
        let mut smp = sampler(SamplingMode::General, 8);
        let a = smp.random_pd().unwrap();
        let b = smp.random_pd().unwrap();
        let rep = certify_bounded_corollary(&a, &b, 0.5, 3.0, 0.5, BoundedForm::PowerPair { q: 1.0, p: 2.0 }).unwrap();
        assert!(rep.holds);
        let m = a.min_eigenvalue() + 0.01;
        assert!(certify_bounded_corollary(&a, &b, m, 3.0, 0.5, BoundedForm::EigenHigh { r: 2.0 }).is_err());
    }

    #[test]
    fn gt_equal_arguments_and_sampled_pairs() {
        let h = HermitianMatrix::from_real_rows(&[vec![0.3, 0.2], vec![0.2, -0.5]]).unwrap();
        let rep = certify_gt_reverse_specht(&h, &h, 0.0, 0.0, 0.5, 1.0).unwrap();
        assert_eq!(rep.factor, 1.0);
        assert!(rep.margins.iter().all(|m| m.abs() < 1e-12));
        let mut smp = sampler(SamplingMode::General, 9);
        let pair = smp.olson_exponential_pair(-1.0, 1.0).unwrap();
        for p in [0.5, 1.0, 2.0] {
            let rep = certify_gt_reverse_specht(&pair.h, &pair.k, pair.s, pair.t, 0.5, p).unwrap();
            assert!(rep.holds);
            assert!(rep.factor >= 1.0);
        }
        let norms = NormId::family(4);
        let rep = certify_gt_reverse_norm(&pair.h, &pair.k, pair.s, pair.t, 0.5, 1.0, &norms).unwrap();
        assert!(rep.holds);
        let rep = certify_gt_specht_squared(&pair.h, &pair.k, pair.s, pair.t, &norms).unwrap();
        assert!(rep.holds);
        let rep = certify_gt_bounded_specht(&pair.h, &pair.k, -1.0, 1.0, 0.5, 1.0).unwrap();
        assert!(rep.holds);
    }

    #[test]
    fn norm_form_alpha_zero_and_ky_fan_one() {
        let h = HermitianMatrix::from_real_rows(&[vec![0.3, 0.2], vec![0.2, -0.5]]).unwrap();
        let k = HermitianMatrix::diagonal(&[0.1, 0.4]);
        let (lo, hi) = (-1.0, 1.0);
        let norms = [NormId::KyFan(1), NormId::Schatten(crate::matcore::SchattenP::Infinity)];
        let rep = certify_gt_reverse_norm(&h, &k, lo, hi, 0.0, 1.0, &norms).unwrap();
        assert!(rep.holds);
        assert!((rep.lhs_values[0] - rep.lhs_values[1]).abs() < 1e-14);
        assert!((rep.rhs_values[0] - rep.factor * rep.lhs_values[0]).abs() < 1e-12);
    }

    #[test]
    fn bounded_gt_equal_bounds_gives_unit_factor() {
        let h = HermitianMatrix::diagonal(&[0.2, 0.2]);
        let rep = certify_gt_bounded_specht(&h, &h, 0.2, 0.2, 0.5, 1.0).unwrap();
        assert_eq!(rep.factor, 1.0);
        assert!(rep.margins.iter().all(|m| m.abs() < 1e-9));
    }
}
