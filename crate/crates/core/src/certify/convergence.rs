//! How the reverse Golden–Thompson bounds close in on `λ_k(e^{(1-α)H+αK})`
//! as `p ↓ 0`.

use serde::{Deserialize, Serialize};

use super::kantorovich::{certify_gt_kantorovich_bounded, certify_gt_reverse_kantorovich};
use super::report::InequalityReport;
use super::specht::{certify_gt_bounded_specht, certify_gt_reverse_specht};
use crate::constants::check_descending;
use crate::error::{Error, Result};
use crate::matcore::HermitianMatrix;

/// Which factor multiplies the right-hand side.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "factor")]
pub enum ConvergenceFactor {
    /// `max{S(e^{sp}),S(e^{tp})}^{1/p}` under the Olson sandwich.
    Specht { s: f64, t: f64 },
    /// `K(e^{p(t-s)}, α)^{-1/p}` under the Olson sandwich.
    Kantorovich { s: f64, t: f64 },
    /// `S(e^{(M-m)p})^{1/p}` under `mI <= H, K <= MI`.
    BoundedSpecht { m: f64, big_m: f64 },
    /// `K(e^{2p(M-m)}, α)^{-1/p}` under `mI <= H, K <= MI`.
    BoundedKantorovich { m: f64, big_m: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRow {
    pub p: f64,
    pub k: usize,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs - lhs`.
    pub gap: f64,
    /// `gap / lhs`.
    pub relative_gap: f64,
}

/// Default `p` sequence.
pub const DEFAULT_P_SEQUENCE: [f64; 6] = [1.0, 0.3, 0.1, 0.03, 0.01, 1e-4];

fn report_at(
    h: &HermitianMatrix,
    k: &HermitianMatrix,
    alpha: f64,
    p: f64,
    factor: ConvergenceFactor,
) -> Result<InequalityReport> {
    match factor {
        ConvergenceFactor::Specht { s, t } => certify_gt_reverse_specht(h, k, s, t, alpha, p),
        ConvergenceFactor::Kantorovich { s, t } => certify_gt_reverse_kantorovich(h, k, s, t, alpha, p),
        ConvergenceFactor::BoundedSpecht { m, big_m } => certify_gt_bounded_specht(h, k, m, big_m, alpha, p),
        ConvergenceFactor::BoundedKantorovich { m, big_m } => certify_gt_kantorovich_bounded(h, k, m, big_m, alpha, p),
    }
}

/// One row per `(p, k)`, in the order of `p_sequence` then `k`.
pub fn convergence_study(
    h: &HermitianMatrix,
    k: &HermitianMatrix,
    alpha: f64,
    p_sequence: &[f64],
    factor: ConvergenceFactor,
) -> Result<Vec<ConvergenceRow>> {
    if p_sequence.is_empty() {
        return Err(Error::EmptySequence);
    }
    check_descending(p_sequence)?;
    let mut rows = Vec::with_capacity(p_sequence.len() * h.dim());
    for &p in p_sequence {
        let rep = report_at(h, k, alpha, p, factor)?;
        for (i, (&lhs, &rhs)) in rep.lhs_values.iter().zip(&rep.rhs_values).enumerate() {
            let gap = rhs - lhs;
            rows.push(ConvergenceRow { p, k: i + 1, lhs, rhs, gap, relative_gap: gap / lhs });
        }
    }
    Ok(rows)
}

/// `max_k |relative_gap|` for each `p`, in sequence order.
pub fn max_relative_gaps(rows: &[ConvergenceRow]) -> Vec<(f64, f64)> {
    let mut out: Vec<(f64, f64)> = Vec::new();
    for row in rows {
        match out.last_mut() {
            Some((p, g)) if *p == row.p => *g = g.max(row.relative_gap.abs()),
            _ => out.push((row.p, row.relative_gap.abs())),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{Sampler, SamplerConfig, SamplingMode};

    #[test]
    fn equal_arguments_gap_is_factor_slack() {
        let h = HermitianMatrix::from_real_rows(&[vec![0.3, 0.2], vec![0.2, -0.5]]).unwrap();
        let rows =
            convergence_study(&h, &h, 0.5, &[1.0, 0.1, 0.01], ConvergenceFactor::Specht { s: -0.5, t: 0.5 }).unwrap();
        assert_eq!(rows.len(), 6);
        let gaps = max_relative_gaps(&rows);
        assert!(gaps.windows(2).all(|w| w[1].1 < w[0].1));
        assert!(gaps[2].1 < 1e-3);
    }

    #[test]
    fn sampled_pair_converges() {
        let mut smp = Sampler::new(SamplerConfig::new(4, 31, 0.5, 3.0, SamplingMode::General)).unwrap();
        let pair = smp.olson_exponential_pair(-1.0, 1.0).unwrap();
        for factor in [
            ConvergenceFactor::Specht { s: pair.s, t: pair.t },
            ConvergenceFactor::Kantorovich { s: pair.s, t: pair.t },
            ConvergenceFactor::BoundedKantorovich { m: -1.0, big_m: 1.0 },
        ] {
            let rows = convergence_study(&pair.h, &pair.k, 0.5, &DEFAULT_P_SEQUENCE, factor).unwrap();
            assert!(rows.iter().all(|r| r.gap >= -1e-9 * r.lhs));
            let last = max_relative_gaps(&rows).last().copied().unwrap();
            assert_eq!(last.0, 1e-4);
            assert!(last.1 <= 1e-3, "{factor:?}: {last:?}");
        }
    }

    #[test]
    fn rejects_bad_sequences() {
        let h = HermitianMatrix::identity(2);
        let f = ConvergenceFactor::Specht { s: 0.0, t: 0.0 };
        assert_eq!(convergence_study(&h, &h, 0.5, &[], f), Err(Error::EmptySequence));
        assert!(convergence_study(&h, &h, 0.5, &[0.1, 1.0], f).is_err());
    }
}
