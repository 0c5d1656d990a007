//! Reverse inequalities with a Kantorovich-type factor.

use super::forms::{self, check_exponent, check_spectrum_bounds};
use super::report::{digest, params, Comparison, InequalityId, InequalityReport};
use super::specht::check_exponential_sandwich;
use crate::constants::ln_kantorovich_exp;
use crate::error::{Error, Result};
use crate::matcore::{check_dims, inverse, HermitianMatrix, Matrix, PositiveDefiniteMatrix};
use crate::means::check_alpha;

/// `K(e^x, α)^{-1/p}`.
pub(crate) fn kantorovich_root_factor(x: f64, alpha: f64, p: f64) -> Result<f64> {
    Ok((-ln_kantorovich_exp(x, alpha)? / p).exp())
}

/// `U A^{-1} U* <= (m+M)²/(4mM) (U A U*)^{-1}` for `mI <= A <= MI` and a
/// `k × n` isometry `U` (`U U* = I_k`).
pub fn certify_kantorovich_matrix(
    a: &PositiveDefiniteMatrix,
    m: f64,
    big_m: f64,
    u: &Matrix,
) -> Result<InequalityReport> {
    if !(m > 0.0 && m <= big_m && big_m.is_finite()) {
        return Err(Error::InvalidParameter(format!("need 0 < m <= M, got m = {m}, M = {big_m}")));
    }
    check_dims(u.cols(), a.dim())?;
    let rows = u.rows();
    let gram_defect = u.matmul(&u.adjoint()).sub(&Matrix::identity(rows)).frobenius_norm();
    if !(rows >= 1 && rows <= a.dim() && gram_defect <= 1e-10 * (rows as f64).sqrt()) {
        return Err(Error::HypothesisViolated(format!("U U* != I (defect {gram_defect:e})")));
    }
    check_spectrum_bounds(a.hermitian(), m, big_m, "A")?;
    let factor = (m + big_m) * (m + big_m) / (4.0 * m * big_m);
    let lhs = inverse(a)?.hermitian().congruence(u)?;
    let inner = PositiveDefiniteMatrix::new(a.hermitian().congruence(u)?)?;
    let rhs = inverse(&inner)?.hermitian().scale(factor);
    Ok(forms::loewner_entries(&lhs, &rhs)?.into_report(
        InequalityId::KantorovichMatrix,
        Comparison::Loewner,
        params(&[("m", m), ("M", big_m), ("rows", rows as f64)]),
        factor,
        digest(&[a.as_matrix(), u], &[m, big_m]),
    ))
}

/// `λ_k(e^{(1-α)H+αK}) <= K(e^{p(t-s)}, α)^{-1/p} λ_k(e^{pH} #_α e^{pK})^{1/p}`
/// under `e^s e^H ⪯_ols e^K ⪯_ols e^t e^H`.
pub fn certify_gt_reverse_kantorovich(
    h: &HermitianMatrix,
    k: &HermitianMatrix,
    s: f64,
    t: f64,
    alpha: f64,
    p: f64,
) -> Result<InequalityReport> {
    if !(s.is_finite() && t.is_finite() && s <= t) {
        return Err(Error::InvalidParameter(format!("need s <= t, got s = {s}, t = {t}")));
    }
    check_alpha(alpha)?;
    check_exponent("p", p, 0.0, f64::INFINITY, true)?;
    check_exponential_sandwich(h, k, s, t)?;
    let factor = kantorovich_root_factor(p * (t - s), alpha, p)?;
    Ok(forms::gt_eigen(h, k, alpha, p, factor)?.into_report(
        InequalityId::GtKantorovich,
        Comparison::Eigenvalue,
        params(&[("alpha", alpha), ("p", p), ("s", s), ("t", t)]),
        factor,
        digest(&[h.as_matrix(), k.as_matrix()], &[s, t, alpha, p]),
    ))
}

fn check_bounds(h: &HermitianMatrix, k: &HermitianMatrix, m: f64, big_m: f64) -> Result<()> {
    check_dims(h.dim(), k.dim())?;
    if !(m.is_finite() && big_m.is_finite() && m <= big_m) {
        return Err(Error::InvalidParameter(format!("need m <= M, got m = {m}, M = {big_m}")));
    }
    check_spectrum_bounds(h, m, big_m, "H")?;
    check_spectrum_bounds(k, m, big_m, "K")
}

/// Bounded form with factor `K(e^{2p(M-m)}, α)^{-1/p}` under
/// `mI <= H, K <= MI`.
pub fn certify_gt_kantorovich_bounded(
    h: &HermitianMatrix,
    k: &HermitianMatrix,
    m: f64,
    big_m: f64,
    alpha: f64,
    p: f64,
) -> Result<InequalityReport> {
    check_alpha(alpha)?;
    check_exponent("p", p, 0.0, f64::INFINITY, true)?;
    check_bounds(h, k, m, big_m)?;
    let factor = kantorovich_root_factor(2.0 * p * (big_m - m), alpha, p)?;
    Ok(forms::gt_eigen(h, k, alpha, p, factor)?.into_report(
        InequalityId::GtKantorovichBounded,
        Comparison::Eigenvalue,
        params(&[("alpha", alpha), ("p", p), ("m", m), ("M", big_m)]),
        factor,
        digest(&[h.as_matrix(), k.as_matrix()], &[m, big_m, alpha, p]),
    ))
}

/// `(e^{2M} + e^{2m}) / (2 e^{M+m})`, written as `cosh(M - m)`.
pub fn squared_kantorovich_factor(m: f64, big_m: f64) -> f64 {
    (big_m - m).cosh()
}

/// `λ_k(e^{H+K}) <= (e^{2M}+e^{2m})/(2e^{M+m}) λ_k(e^{2H} # e^{2K})` under
/// `mI <= H, K <= MI`: the bounded form at weight one half and `p = 2`,
/// squared. The closed-form factor is first checked against
/// `K(e^{4(M-m)}, 1/2)^{-1}`.
pub fn certify_gt_kantorovich_squared(
    h: &HermitianMatrix,
    k: &HermitianMatrix,
    m: f64,
    big_m: f64,
) -> Result<InequalityReport> {
    check_bounds(h, k, m, big_m)?;
    let factor = squared_kantorovich_factor(m, big_m);
    let via_constant = kantorovich_root_factor(4.0 * (big_m - m), 0.5, 1.0)?;
    if (factor - via_constant).abs() > 1e-12 * factor {
        return Err(Error::IdentityCheck(format!("cosh(M - m) = {factor} but K(e^(4(M-m)), 1/2)^-1 = {via_constant}")));
    }
    Ok(forms::gt_squared_eigen(h, k, factor)?.into_report(
        InequalityId::GtKantorovichSquared,
        Comparison::Eigenvalue,
        params(&[("alpha", 0.5), ("p", 2.0), ("m", m), ("M", big_m)]),
        factor,
        digest(&[h.as_matrix(), k.as_matrix()], &[m, big_m]),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{Sampler, SamplerConfig, SamplingMode};

    #[test]
    fn matrix_form_two_by_two_closed_form() {
        let (m, big_m) = (1.0, 4.0);
        let a = PositiveDefiniteMatrix::diagonal(&[m, big_m]).unwrap();
        let rep = certify_kantorovich_matrix(&a, m, big_m, &Matrix::identity(2)).unwrap();
        assert!(rep.holds);
        assert!((rep.factor - 25.0 / 16.0).abs() < 1e-15);
        // U = I: rhs - lhs = (c - 1) A^{-1}
        let want = [(rep.factor - 1.0) / big_m, (rep.factor - 1.0) / m];
        for (got, w) in rep.rhs_values.iter().zip(want) {
            assert!((got - w).abs() < 1e-14);
        }
    }

    #[test]
    fn matrix_form_scalar_and_random_isometry() {
        let a = PositiveDefiniteMatrix::identity(3).scale(2.0).unwrap();
        let rep = certify_kantorovich_matrix(&a, 2.0, 2.0, &Matrix::identity(3)).unwrap();
        assert_eq!(rep.factor, 1.0);
        assert!(rep.margins.iter().all(|x| x.abs() < 1e-15));

        let mut smp = Sampler::new(SamplerConfig::new(5, 21, 0.5, 4.0, SamplingMode::General)).unwrap();
        let a = smp.random_pd().unwrap();
        let u = smp.random_isometry(3, 5).unwrap();
        let rep = certify_kantorovich_matrix(&a, 0.5, 4.0, &u).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.lhs_values.len(), 3);
        let not_isometry = u.scale(1.1);
        assert!(matches!(certify_kantorovich_matrix(&a, 0.5, 4.0, &not_isometry), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn squared_identity_holds() {
        for d in [0.0, 0.1, 1.0, 3.0] {
            let f = squared_kantorovich_factor(-d, 0.0);
            let g = kantorovich_root_factor(4.0 * d, 0.5, 1.0).unwrap();
            assert!((f - g).abs() <= 1e-12 * f, "{d}: {f} vs {g}");
            let direct = ((2.0 * 0.0f64).exp() + (-2.0 * d).exp()) / (2.0 * (-d).exp());
            assert!((f - direct).abs() < 1e-14 * f);
        }
    }

    #[test]
    fn equal_bounds_and_sampled_pairs() {
        let h = HermitianMatrix::diagonal(&[0.4, 0.4]);
        let rep = certify_gt_kantorovich_bounded(&h, &h, 0.4, 0.4, 0.5, 1.0).unwrap();
        assert_eq!(rep.factor, 1.0);
        assert!(rep.margins.iter().all(|x| x.abs() < 1e-9));
        let mut smp = Sampler::new(SamplerConfig::new(4, 2, 0.5, 3.0, SamplingMode::General)).unwrap();
        let pair = smp.olson_exponential_pair(-1.0, 0.5).unwrap();
        assert!(certify_gt_kantorovich_squared(&pair.h, &pair.k, -1.0, 0.5).unwrap().holds);
        assert!(certify_gt_kantorovich_bounded(&pair.h, &pair.k, -1.0, 0.5, 0.5, 2.0).unwrap().holds);
        assert!(certify_gt_reverse_kantorovich(&pair.h, &pair.k, pair.s, pair.t, 0.3, 0.7).unwrap().holds);
    }

    #[test]
    fn factor_tends_to_one() {
        let mut last = f64::INFINITY;
        for p in [1.0, 0.1, 0.01, 1e-4] {
            let f = kantorovich_root_factor(2.0 * p * 2.0, 0.5, p).unwrap();
            assert!(f >= 1.0 && f < last);
            last = f;
        }
        assert!(last - 1.0 < 1e-3);
    }
}
