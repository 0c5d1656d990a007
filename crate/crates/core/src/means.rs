//! Weighted geometric mean and the log-Euclidean point.
//!
//! `A #_α B = A^{1/2} (A^{-1/2} B A^{-1/2})^α A^{1/2}` (Kubo–Ando form). The
//! family `(e^{qH} #_α e^{qK})^{1/q}` tends to `exp((1-α)H + αK)` as `q ↓ 0`;
//! [`limit_probe`] reports how close it gets along a sequence of `q`.

use serde::{Deserialize, Serialize};

use crate::constants::check_descending;
use crate::error::{Error, Result};
use crate::matcore::{check_dims, exp_h, power, HermitianMatrix, PositiveDefiniteMatrix};

/// Weight `α ∈ [0, 1]` and exponent `p > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeanParams {
    pub alpha: f64,
    pub p: f64,
}

impl MeanParams {
    pub fn new(alpha: f64, p: f64) -> Result<Self> {
        check_alpha(alpha)?;
        if !(p > 0.0 && p.is_finite()) {
            return Err(Error::NonPositive { name: "p", value: p });
        }
        Ok(Self { alpha, p })
    }
}

pub(crate) fn check_alpha(alpha: f64) -> Result<()> {
    if (0.0..=1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("alpha = {alpha} outside [0, 1]")))
    }
}

/// `A #_α B`. Rejects `A` with condition number above
/// [`MAX_CONDITION`](crate::matcore::MAX_CONDITION).
pub fn geometric_mean(
    a: &PositiveDefiniteMatrix,
    b: &PositiveDefiniteMatrix,
    alpha: f64,
) -> Result<PositiveDefiniteMatrix> {
    check_alpha(alpha)?;
    check_dims(a.dim(), b.dim())?;
    if alpha == 0.0 {
        return Ok(a.clone());
    }
    if alpha == 1.0 {
        return Ok(b.clone());
    }
    a.check_condition()?;
    let sqrt_a = a.spectral().map(f64::sqrt)?.reconstruct();
    let inv_sqrt_a = a.spectral().map(|x| 1.0 / x.sqrt())?.reconstruct();
    let inner = PositiveDefiniteMatrix::new(b.hermitian().congruence(inv_sqrt_a.as_matrix())?)?;
    let inner_alpha = power(&inner, alpha)?;
    PositiveDefiniteMatrix::new(inner_alpha.hermitian().congruence(sqrt_a.as_matrix())?)
}

/// `exp((1-α)H + αK)`.
pub fn log_euclidean(h: &HermitianMatrix, k: &HermitianMatrix, alpha: f64) -> Result<PositiveDefiniteMatrix> {
    check_alpha(alpha)?;
    exp_h(&h.combine(1.0 - alpha, k, alpha)?)
}

/// `(e^{qH} #_α e^{qK})^{1/q}`.
pub fn mean_power(h: &HermitianMatrix, k: &HermitianMatrix, alpha: f64, q: f64) -> Result<PositiveDefiniteMatrix> {
    check_alpha(alpha)?;
    check_dims(h.dim(), k.dim())?;
    if !(q > 0.0 && q.is_finite()) {
        return Err(Error::NonPositive { name: "q", value: q });
    }
    // exact for every q: the mean of equal arguments, or an endpoint weight
    if alpha == 0.0 || h == k {
        return exp_h(h);
    }
    if alpha == 1.0 {
        return exp_h(k);
    }
    let eh = exp_h(&h.scale(q))?;
    let ek = exp_h(&k.scale(q))?;
    power(&geometric_mean(&eh, &ek, alpha)?, 1.0 / q)
}

/// Eigenvalues of `e^{pH} #_α e^{pK}`, nonincreasing. Raising them to `1/p`
/// gives the eigenvalues of [`mean_power`] without forming the power.
pub fn mean_eigenvalues(h: &HermitianMatrix, k: &HermitianMatrix, alpha: f64, p: f64) -> Result<Vec<f64>> {
    check_alpha(alpha)?;
    if !(p > 0.0 && p.is_finite()) {
        return Err(Error::NonPositive { name: "p", value: p });
    }
    let eh = exp_h(&h.scale(p))?;
    let ek = exp_h(&k.scale(p))?;
    Ok(geometric_mean(&eh, &ek, alpha)?.eigenvalues().to_vec())
}

/// Frobenius distance from `mean_power(H, K, α, q)` to `log_euclidean(H, K, α)`
/// for each `q` of a strictly descending positive sequence.
pub fn limit_probe(
    h: &HermitianMatrix,
    k: &HermitianMatrix,
    alpha: f64,
    q_sequence: &[f64],
) -> Result<Vec<(f64, f64)>> {
    if q_sequence.is_empty() {
        return Err(Error::EmptySequence);
    }
    check_descending(q_sequence)?;
    let target = log_euclidean(h, k, alpha)?;
    q_sequence
        .iter()
        .map(|&q| {
            let m = mean_power(h, k, alpha, q)?;
            Ok((q, m.as_matrix().sub(target.as_matrix()).frobenius_norm()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::Matrix;

    fn dist(a: &PositiveDefiniteMatrix, b: &PositiveDefiniteMatrix) -> f64 {
        a.as_matrix().sub(b.as_matrix()).frobenius_norm() / b.hermitian().frobenius_norm()
    }

    fn pd_a() -> PositiveDefiniteMatrix {
        PositiveDefiniteMatrix::new(
            HermitianMatrix::from_real_rows(&[vec![2.0, 0.4, 0.1], vec![0.4, 1.0, -0.3], vec![0.1, -0.3, 1.5]])
                .unwrap(),
        )
        .unwrap()
    }

    fn pd_b() -> PositiveDefiniteMatrix {
        PositiveDefiniteMatrix::new(
            HermitianMatrix::from_real_rows(&[vec![1.0, -0.2, 0.0], vec![-0.2, 3.0, 0.5], vec![0.0, 0.5, 0.7]])
                .unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn idempotent_on_equal_arguments() {
        let a = pd_a();
        for alpha in [0.2, 0.5, 0.9] {
            assert!(dist(&geometric_mean(&a, &a, alpha).unwrap(), &a) < 1e-11);
        }
    }

    #[test]
    fn endpoints() {
        let (a, b) = (pd_a(), pd_b());
        assert!(dist(&geometric_mean(&a, &b, 0.0).unwrap(), &a) < 1e-15);
        assert!(dist(&geometric_mean(&a, &b, 1.0).unwrap(), &b) < 1e-15);
        // the computational path itself also lands on the endpoints
        assert!(dist(&geometric_mean(&a, &b, 1e-300).unwrap(), &a) < 1e-12);
        assert!(dist(&geometric_mean(&a, &b, 1.0 - 1e-16).unwrap(), &b) < 1e-12);
    }

    #[test]
    fn commuting_diagonal_pair() {
        let a = PositiveDefiniteMatrix::diagonal(&[1.0, 4.0]).unwrap();
        let b = PositiveDefiniteMatrix::diagonal(&[4.0, 1.0]).unwrap();
        let m = geometric_mean(&a, &b, 0.5).unwrap();
        assert!(m.as_matrix().sub(&Matrix::from_diagonal(&[2.0, 2.0])).frobenius_norm() < 1e-14);
    }

    #[test]
    fn weight_swap_symmetry() {
        let (a, b) = (pd_a(), pd_b());
        let ab = geometric_mean(&a, &b, 0.3).unwrap();
        let ba = geometric_mean(&b, &a, 0.7).unwrap();
        assert!(dist(&ab, &ba) < 1e-10);
    }

    #[test]
    fn alpha_out_of_range() {
        let a = pd_a();
        assert!(matches!(geometric_mean(&a, &a, 1.5), Err(Error::InvalidParameter(_))));
        assert!(MeanParams::new(0.5, 0.0).is_err());
        assert!(MeanParams::new(-0.1, 1.0).is_err());
        assert!(MeanParams::new(0.5, 2.0).is_ok());
    }

    #[test]
    fn ill_conditioned_rejected() {
        let a = PositiveDefiniteMatrix::diagonal(&[1.0, 1e-13]).unwrap();
        let b = PositiveDefiniteMatrix::identity(2);
        assert!(matches!(geometric_mean(&a, &b, 0.5), Err(Error::Cond { .. })));
    }

    #[test]
    fn log_euclidean_basic_cases() {
        let h = HermitianMatrix::from_real_rows(&[vec![0.3, 0.2], vec![0.2, -0.5]]).unwrap();
        let eh = exp_h(&h).unwrap();
        assert!(dist(&log_euclidean(&h, &h, 0.4).unwrap(), &eh) < 1e-14);
        let d1 = HermitianMatrix::diagonal(&[1.0, -1.0]);
        let d2 = HermitianMatrix::diagonal(&[0.0, 2.0]);
        let le = log_euclidean(&d1, &d2, 0.25).unwrap();
        let expect = PositiveDefiniteMatrix::diagonal(&[0.75f64.exp(), (-0.25f64).exp()]).unwrap();
        assert!(dist(&le, &expect) < 1e-15);
    }

    #[test]
    fn mean_power_commuting_and_endpoint() {
        let d1 = HermitianMatrix::diagonal(&[1.0, -1.0]);
        let d2 = HermitianMatrix::diagonal(&[0.0, 2.0]);
        let mp = mean_power(&d1, &d2, 0.25, 1.0).unwrap();
        assert!(dist(&mp, &log_euclidean(&d1, &d2, 0.25).unwrap()) < 1e-14);
        let h = HermitianMatrix::from_real_rows(&[vec![0.3, 0.2], vec![0.2, -0.5]]).unwrap();
        for q in [2.0, 0.5, 1e-3] {
            assert_eq!(mean_power(&h, &d2, 0.0, q).unwrap(), exp_h(&h).unwrap());
        }
    }

    #[test]
    fn limit_probe_errors() {
        let h = HermitianMatrix::identity(2);
        assert_eq!(limit_probe(&h, &h, 0.5, &[]), Err(Error::EmptySequence));
        assert!(limit_probe(&h, &h, 0.5, &[0.1, 0.5]).is_err());
        assert!(limit_probe(&h, &h, 0.5, &[0.1, -0.5]).is_err());
    }

    #[test]
    fn limit_probe_trivial_cases() {
        let h = HermitianMatrix::from_real_rows(&[vec![0.3, 0.2], vec![0.2, -0.5]]).unwrap();
        let k = HermitianMatrix::from_real_rows(&[vec![-1.0, 0.7], vec![0.7, 0.4]]).unwrap();
        let qs = [1.0, 0.1, 1e-3, 1e-5];
        for (_, d) in limit_probe(&h, &h, 0.5, &qs).unwrap() {
            assert!(d <= 1e-12);
        }
        for (_, d) in limit_probe(&h, &k, 1.0, &qs).unwrap() {
            assert!(d <= 1e-12);
        }
    }
}
