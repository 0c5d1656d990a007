//! Forward inequalities the reverse bounds complement.

use super::forms::{self, check_exponent, check_norms};
use super::report::{digest, params, Comparison, Entries, InequalityId, InequalityReport, NormId};
use crate::error::Result;
use crate::matcore::{check_dims, exp_h, power, HermitianMatrix, PositiveDefiniteMatrix};
use crate::means::{check_alpha, geometric_mean};

/// `A^r #_α B^r ≺_log (A #_α B)^r`, `r >= 1`.
///
/// Entries are cumulative sums of log-eigenvalues for `k = 1..n`, plus the
/// determinant entry with the sides swapped, so equality at `k = n` is
/// checked in both directions. Log-domain margins are relative errors of
/// the products, so each entry uses scale `max(1, |lhs|, |rhs|)`.
pub fn certify_ando_hiai(
    a: &PositiveDefiniteMatrix,
    b: &PositiveDefiniteMatrix,
    alpha: f64,
    r: f64,
) -> Result<InequalityReport> {
    check_dims(a.dim(), b.dim())?;
    check_alpha(alpha)?;
    check_exponent("r", r, 1.0, f64::INFINITY, false)?;
    let lhs = geometric_mean(&power(a, r)?, &power(b, r)?, alpha)?;
    let rhs_vals: Vec<f64> = geometric_mean(a, b, alpha)?.eigenvalues().iter().map(|x| r * x.ln()).collect();
    let cumulative = |v: &[f64]| -> Vec<f64> {
        v.iter()
            .scan(0.0, |acc, &x| {
                *acc += x;
                Some(*acc)
            })
            .collect()
    };
    let lhs_vals: Vec<f64> = lhs.eigenvalues().iter().map(|x| x.ln()).collect();
    let mut l = cumulative(&lhs_vals);
    let mut rr = cumulative(&rhs_vals);
    let n = l.len();
    let mut labels: Vec<String> = (1..=n).map(|k| format!("log prod k = {k}")).collect();
    labels.push("log det (reversed)".into());
    let (dl, dr) = (l[n - 1], rr[n - 1]);
    l.push(dr);
    rr.push(dl);
    let scales = l.iter().zip(&rr).map(|(x, y)| x.abs().max(y.abs()).max(1.0)).collect();
    Ok(Entries::with_scales(labels, l, rr, scales).into_report(
        InequalityId::AndoHiai,
        Comparison::LogMajorization,
        params(&[("alpha", alpha), ("r", r)]),
        1.0,
        digest(&[a.as_matrix(), b.as_matrix()], &[alpha, r]),
    ))
}

/// `Tr e^{H+K} <= Tr e^H e^K`.
pub fn certify_golden_thompson(h: &HermitianMatrix, k: &HermitianMatrix) -> Result<InequalityReport> {
    check_dims(h.dim(), k.dim())?;
    let lhs = exp_h(&h.add(k)?)?.hermitian().trace();
    let rhs = exp_h(h)?.as_matrix().matmul(exp_h(k)?.as_matrix()).trace().re;
    Ok(Entries::new(vec!["trace".into()], vec![lhs], vec![rhs]).into_report(
        InequalityId::GoldenThompson,
        Comparison::Trace,
        params(&[]),
        1.0,
        digest(&[h.as_matrix(), k.as_matrix()], &[]),
    ))
}

/// `‖(e^{pH} #_α e^{pK})^{1/p}‖ <= ‖e^{(1-α)H+αK}‖` over the selected norms.
pub fn certify_gt_forward_norm(
    h: &HermitianMatrix,
    k: &HermitianMatrix,
    alpha: f64,
    p: f64,
    norms: &[NormId],
) -> Result<InequalityReport> {
    check_dims(h.dim(), k.dim())?;
    check_alpha(alpha)?;
    check_exponent("p", p, 0.0, f64::INFINITY, true)?;
    check_norms(norms, h.dim())?;
    let x = crate::means::mean_power(h, k, alpha, p)?;
    let y = crate::means::log_euclidean(h, k, alpha)?;
    Ok(forms::norm_entries(x.hermitian(), y.hermitian(), 1.0, norms)?.into_report(
        InequalityId::GtForwardNorm,
        Comparison::Norm,
        params(&[("alpha", alpha), ("p", p)]),
        1.0,
        digest(&[h.as_matrix(), k.as_matrix()], &[alpha, p]),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{Sampler, SamplerConfig, SamplingMode};

    #[test]
    fn commuting_pairs_hold() {
        let a = PositiveDefiniteMatrix::diagonal(&[1.0, 3.0]).unwrap();
        let b = PositiveDefiniteMatrix::diagonal(&[2.0, 0.5]).unwrap();
        let rep = certify_ando_hiai(&a, &b, 0.5, 2.0).unwrap();
        assert!(rep.holds);
        assert!(rep.margins.iter().all(|m| m.abs() < 1e-12));
        let h = HermitianMatrix::diagonal(&[0.1, -0.4]);
        let k = HermitianMatrix::diagonal(&[0.7, 0.2]);
        let rep = certify_golden_thompson(&h, &k).unwrap();
        assert!(rep.holds && rep.margins[0].abs() < 1e-14);
        let rep = certify_gt_forward_norm(&h, &k, 0.3, 1.0, &NormId::family(2)).unwrap();
        assert!(rep.holds);
    }

    #[test]
    fn random_pairs_hold_with_determinant_equality() {
        let mut smp = Sampler::new(SamplerConfig::new(4, 13, 0.3, 3.0, SamplingMode::General)).unwrap();
        let a = smp.random_pd().unwrap();
        let b = smp.random_pd().unwrap();
        let rep = certify_ando_hiai(&a, &b, 0.4, 2.0).unwrap();
        assert!(rep.holds, "{rep:?}");
        let n = a.dim();
        assert!(rep.margins[n - 1].abs() < 1e-9);
        let h = smp.random_bounded_hermitian_in(-2.0, 2.0).unwrap();
        let k = smp.random_bounded_hermitian_in(-2.0, 2.0).unwrap();
        let rep = certify_golden_thompson(&h, &k).unwrap();
        assert!(rep.holds && rep.margins[0] > 0.0);
        assert!(certify_gt_forward_norm(&h, &k, 0.5, 0.7, &NormId::family(n)).unwrap().holds);
    }
}
