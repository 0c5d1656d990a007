//! Seeded certification sweeps.
//!
//! Instance `i` of a campaign draws from its own ChaCha stream (see
//! [`Sampler::for_instance`]), so results do not depend on scheduling and
//! any single instance can be replayed from `(seed, i)`.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::fm::{certify_fm_eigen, certify_fm_gt, certify_fm_low, FmExponents};
use super::forward::{certify_ando_hiai, certify_golden_thompson, certify_gt_forward_norm};
use super::kantorovich::{
    certify_gt_kantorovich_bounded, certify_gt_kantorovich_squared, certify_gt_reverse_kantorovich,
    certify_kantorovich_matrix,
};
use super::report::{InequalityId, InequalityReport, NormId, DEFAULT_TOLERANCE};
use super::specht::{
    certify_bounded_corollary, certify_eigen_power_high, certify_gt_bounded_specht, certify_gt_reverse_norm,
    certify_gt_reverse_specht, certify_gt_specht_squared, certify_pq_reverse, certify_specht_power_low, BoundedForm,
};
use crate::error::{Error, Result};
use crate::matcore::{HermitianMatrix, PositiveDefiniteMatrix, SpectralDecomposition};
use crate::orders::joint_eigenvalues;
use crate::sampling::{PairOrdering, PdPair, Sampler, SamplerConfig, SamplingMode};

/// Fixed values for parameters that are otherwise drawn per instance.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct Overrides {
    pub alpha: Option<f64>,
    pub p: Option<f64>,
    pub q: Option<f64>,
    pub r: Option<f64>,
    pub m: Option<f64>,
    #[serde(rename = "M")]
    pub big_m: Option<f64>,
    pub s: Option<f64>,
    pub t: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub inequality: InequalityId,
    pub seed: u64,
    pub count: usize,
    /// Fixed dimension; otherwise instance `i` uses `2 + i % 5`.
    pub dim: Option<usize>,
    /// Forced mode; otherwise odd instances are commuting.
    pub commuting: Option<bool>,
    pub overrides: Overrides,
    pub tolerance: f64,
}

impl CampaignConfig {
    pub fn new(inequality: InequalityId, seed: u64, count: usize) -> Self {
        Self {
            inequality,
            seed,
            count,
            dim: None,
            commuting: None,
            overrides: Overrides::default(),
            tolerance: DEFAULT_TOLERANCE,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.count == 0 {
            return Err(Error::InvalidParameter("count must be at least 1".into()));
        }
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(Error::NonPositive { name: "tolerance", value: self.tolerance });
        }
        if let Some(n) = self.dim {
            if n == 0 || n > 64 {
                return Err(Error::InvalidParameter(format!("dimension {n} outside 1..=64")));
            }
        }
        validate_overrides(self.inequality, &self.overrides)
    }

    fn instance_dim(&self, index: usize) -> usize {
        self.dim.unwrap_or(2 + index % 5)
    }

    fn instance_mode(&self, index: usize) -> SamplingMode {
        match self.commuting.unwrap_or(index % 2 == 1) {
            true => SamplingMode::Commuting,
            false => SamplingMode::General,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceOutcome {
    pub index: usize,
    pub n: usize,
    pub mode: SamplingMode,
    pub report: InequalityReport,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignResult {
    pub config: CampaignConfig,
    pub outcomes: Vec<InstanceOutcome>,
}

impl CampaignResult {
    pub fn violations(&self) -> usize {
        self.outcomes.iter().filter(|o| !o.report.holds).count()
    }

    pub fn all_hold(&self) -> bool {
        self.violations() == 0
    }

    pub fn worst(&self) -> Option<&InstanceOutcome> {
        self.outcomes.iter().min_by(|a, b| a.report.min_relative_margin().total_cmp(&b.report.min_relative_margin()))
    }

    /// One JSON object per instance, newline separated.
    pub fn to_json_lines(&self) -> Result<String> {
        let mut out = String::new();
        for o in &self.outcomes {
            let line = serde_json::to_string(o).map_err(|e| Error::Literal(e.to_string()))?;
            out.push_str(&line);
            out.push('\n');
        }
        Ok(out)
    }

    /// One row per `(instance, entry)`; reals with 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out =
            String::from("instance,inequality,n,mode,entry,label,lhs,rhs,margin,relative_margin,factor,holds\n");
        for o in &self.outcomes {
            let r = &o.report;
            let mode = match o.mode {
                SamplingMode::General => "general",
                SamplingMode::Commuting => "commuting",
            };
            for i in 0..r.lhs_values.len() {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{}",
                    o.index,
                    r.inequality,
                    o.n,
                    mode,
                    i + 1,
                    r.labels[i].replace(',', ";"),
                    r.lhs_values[i],
                    r.rhs_values[i],
                    r.margins[i],
                    r.relative_margins[i],
                    r.factor,
                    r.holds,
                );
            }
        }
        out
    }
}

/// Runs every instance (in parallel) and returns outcomes in index order.
pub fn run_campaign(cfg: &CampaignConfig) -> Result<CampaignResult> {
    cfg.validate()?;
    let outcomes = (0..cfg.count).into_par_iter().map(|i| run_instance(cfg, i)).collect::<Result<Vec<_>>>()?;
    Ok(CampaignResult { config: cfg.clone(), outcomes })
}

/// Draws and certifies instance `index`.
pub fn run_instance(cfg: &CampaignConfig, index: usize) -> Result<InstanceOutcome> {
    let n = cfg.instance_dim(index);
    let mode = cfg.instance_mode(index);
    let scfg = SamplerConfig::new(n, cfg.seed, PD_RANGE[0], PD_RANGE[1], mode);
    let mut smp = Sampler::for_instance(scfg, index as u64)?;
    let report = certify_instance(cfg.inequality, &cfg.overrides, &mut smp)?.with_tolerance(cfg.tolerance);
    Ok(InstanceOutcome { index, n, mode, report })
}

const PD_RANGE: [f64; 2] = [0.5, 3.0];
const H_RANGE: [f64; 2] = [-1.0, 1.0];
const FM_RANGE: [f64; 2] = [0.2, 1.0];
const FM_EXP_RANGE: [f64; 2] = [-2.0, 0.0];
const KANTOROVICH_RANGE: [f64; 2] = [0.5, 4.0];

enum Kind {
    /// Loewner sandwich `sA <= B <= tA`.
    Sandwich,
    /// Olson sandwich `sA ⪯ B ⪯ tA`.
    OlsonSandwich,
    /// Olson sandwich of exponentials.
    Exponential,
    /// `mI <= A, B <= MI` with positive `m`.
    BoundedPd,
    /// `mI <= H, K <= MI`.
    BoundedHermitian,
    /// `mI <= A <= MI` and an isometry.
    KantorovichMatrix,
    /// Loewner chain below `I`.
    FmLoewner,
    /// Olson chain below `I`.
    FmOlson,
    /// Olson chain of exponentials below `I`.
    FmExponential,
    /// No hypothesis on a positive definite pair.
    FreePd,
    /// No hypothesis on a Hermitian pair.
    Free,
}

fn kind(id: InequalityId) -> Kind {
    use InequalityId::*;
    match id {
        SpechtPowerLow => Kind::Sandwich,
        SpechtEigenHigh | SpechtPowerPair => Kind::OlsonSandwich,
        BoundedPowerLow | BoundedEigenHigh | BoundedPowerPair => Kind::BoundedPd,
        GtSpecht | GtSpechtNorm | GtSpechtSquared | GtKantorovich => Kind::Exponential,
        GtSpechtBounded | GtKantorovichBounded | GtKantorovichSquared => Kind::BoundedHermitian,
        KantorovichMatrix => Kind::KantorovichMatrix,
        FmPowerLow => Kind::FmLoewner,
        FmEigenHigh | FmPowerPair => Kind::FmOlson,
        GtFm => Kind::FmExponential,
        AndoHiai => Kind::FreePd,
        GoldenThompson | GtForwardNorm => Kind::Free,
    }
}

#[derive(Clone, Copy)]
enum Exponent {
    None,
    Low,
    High,
    Pair,
    Gt,
}

fn exponent(id: InequalityId) -> Exponent {
    use InequalityId::*;
    match id {
        SpechtPowerLow | BoundedPowerLow | FmPowerLow => Exponent::Low,
        SpechtEigenHigh | BoundedEigenHigh | FmEigenHigh | AndoHiai => Exponent::High,
        SpechtPowerPair | BoundedPowerPair | FmPowerPair => Exponent::Pair,
        GtSpecht | GtSpechtNorm | GtSpechtBounded | GtKantorovich | GtKantorovichBounded | GtFm | GtForwardNorm => {
            Exponent::Gt
        }
        GtSpechtSquared | GtKantorovichSquared | KantorovichMatrix | GoldenThompson => Exponent::None,
    }
}

fn default_range(k: &Kind) -> Option<[f64; 2]> {
    match k {
        Kind::BoundedPd | Kind::FreePd => Some(PD_RANGE),
        Kind::BoundedHermitian | Kind::Exponential => Some(H_RANGE),
        Kind::KantorovichMatrix => Some(KANTOROVICH_RANGE),
        Kind::FmLoewner | Kind::FmOlson => Some(FM_RANGE),
        Kind::FmExponential => Some(FM_EXP_RANGE),
        Kind::Free => Some([-2.0, 2.0]),
        Kind::Sandwich | Kind::OlsonSandwich => None,
    }
}

fn bad(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

fn validate_overrides(id: InequalityId, o: &Overrides) -> Result<()> {
    let finite = |name: &str, v: Option<f64>| -> Result<()> {
        match v {
            Some(x) if !x.is_finite() => Err(bad(format!("{name} = {x} is not finite"))),
            _ => Ok(()),
        }
    };
    for (name, v) in
        [("alpha", o.alpha), ("p", o.p), ("q", o.q), ("r", o.r), ("m", o.m), ("M", o.big_m), ("s", o.s), ("t", o.t)]
    {
        finite(name, v)?;
    }
    if let Some(a) = o.alpha {
        if !(0.0..=1.0).contains(&a) {
            return Err(bad(format!("alpha = {a} outside [0, 1]")));
        }
    }
    match exponent(id) {
        Exponent::Low => {
            if let Some(r) = o.r {
                if !(r > 0.0 && r <= 1.0) {
                    return Err(bad(format!("{id} needs 0 < r <= 1, got {r}")));
                }
            }
        }
        Exponent::High => {
            if let Some(r) = o.r {
                if r < 1.0 {
                    return Err(bad(format!("{id} needs r >= 1, got {r}")));
                }
            }
        }
        Exponent::Pair | Exponent::Gt => {
            for (name, v) in [("p", o.p), ("q", o.q)] {
                if let Some(x) = v {
                    if x <= 0.0 {
                        return Err(bad(format!("{name} must be positive, got {x}")));
                    }
                }
            }
            if let (Some(q), Some(p)) = (o.q, o.p) {
                if q > p {
                    return Err(bad(format!("need q <= p, got q = {q}, p = {p}")));
                }
            }
        }
        Exponent::None => {}
    }
    let k = kind(id);
    if let (Some(s), Some(t)) = (o.s, o.t) {
        if s > t {
            return Err(bad(format!("need s <= t, got s = {s}, t = {t}")));
        }
    }
    if matches!(k, Kind::Sandwich | Kind::OlsonSandwich) {
        for (name, v) in [("s", o.s), ("t", o.t)] {
            if let Some(x) = v {
                if x <= 0.0 {
                    return Err(bad(format!("{name} must be positive for {id}, got {x}")));
                }
            }
        }
        if o.s.is_some() != o.t.is_some() {
            return Err(bad(format!("{id}: give both s and t or neither")));
        }
    }
    if matches!(k, Kind::Exponential) && o.s.is_some() != o.t.is_some() {
        return Err(bad(format!("{id}: give both s and t or neither")));
    }
    if let Some([lo, hi]) = default_range(&k) {
        let m = o.m.unwrap_or(lo);
        let big_m = o.big_m.unwrap_or(hi);
        if m > big_m {
            return Err(bad(format!("need m <= M, got m = {m}, M = {big_m}")));
        }
        match k {
            Kind::BoundedPd | Kind::FreePd | Kind::KantorovichMatrix if m <= 0.0 => {
                return Err(bad(format!("{id} needs m > 0, got {m}")));
            }
            Kind::FmLoewner | Kind::FmOlson if !(m > 0.0 && big_m <= 1.0) => {
                return Err(bad(format!("{id} needs 0 < m <= M <= 1, got m = {m}, M = {big_m}")));
            }
            Kind::FmExponential if big_m > 0.0 => {
                return Err(bad(format!("{id} needs M <= 0, got {big_m}")));
            }
            _ => {}
        }
    }
    Ok(())
}

struct Draws {
    alpha: f64,
    r: f64,
    q: f64,
    p: f64,
}

fn draw_parameters(id: InequalityId, o: &Overrides, smp: &mut Sampler) -> Draws {
    // every draw happens whether or not it is overridden, so an override
    // leaves the other parameters of the instance unchanged
    let alpha = smp.uniform(0.0, 1.0);
    let u_r = smp.uniform(0.0, 1.0);
    let u_q = smp.uniform(0.0, 1.0);
    let u_p = smp.uniform(0.0, 1.0);
    let r = match exponent(id) {
        Exponent::Low => 0.1 + 0.9 * u_r,
        _ => 1.0 + 2.0 * u_r,
    };
    let (q, p) = match exponent(id) {
        Exponent::Gt => (0.0, 0.1 + 1.9 * u_p),
        _ => {
            let q = o.q.unwrap_or(0.25 + 1.25 * u_q);
            match o.p {
                Some(p) if o.q.is_none() => (p * (0.4 + 0.6 * u_q), p),
                Some(p) => (q, p),
                None => (q, q * (1.0 + 1.5 * u_p)),
            }
        }
    };
    Draws { alpha: o.alpha.unwrap_or(alpha), r: o.r.unwrap_or(r), q: o.q.unwrap_or(q), p: o.p.unwrap_or(p) }
}

fn commuting(smp: &Sampler) -> bool {
    smp.config().mode == SamplingMode::Commuting
}

/// Tightest `(s, t)` with `sA ⪯ B ⪯ tA` for a commuting pair.
fn tight_ratio_bounds(a: &PositiveDefiniteMatrix, b: &PositiveDefiniteMatrix) -> Result<Option<(f64, f64)>> {
    Ok(joint_eigenvalues(a.hermitian(), b.hermitian())?.map(|pairs| {
        let ratios = pairs.iter().map(|(x, y)| y / x);
        let s = ratios.clone().fold(f64::INFINITY, f64::min);
        let t = ratios.fold(f64::NEG_INFINITY, f64::max);
        (s, t)
    }))
}

/// Tightest `(s, t)` with `e^s e^H ⪯ e^K ⪯ e^t e^H` for a commuting pair.
fn tight_log_bounds(h: &HermitianMatrix, k: &HermitianMatrix) -> Result<Option<(f64, f64)>> {
    Ok(joint_eigenvalues(h, k)?.map(|pairs| {
        let diffs = pairs.iter().map(|(x, y)| y - x);
        let s = diffs.clone().fold(f64::INFINITY, f64::min);
        let t = diffs.fold(f64::NEG_INFINITY, f64::max);
        (s, t)
    }))
}

/// General-mode Olson sandwich for user-supplied `s <= t`: `A` has spectrum
/// in `[1, c]` and `B` in `[sc, t]` with `c = sqrt(t/s)`, so the spectral gap
/// certifies both sides.
fn olson_sandwich_with(smp: &mut Sampler, s: f64, t: f64) -> Result<PdPair> {
    if commuting(smp) {
        return smp.sandwich_pair(s, t);
    }
    let c = (t / s).sqrt();
    let a = smp.random_pd_in(1.0, c)?;
    let b = smp.random_pd_in(s * c, t)?;
    Ok(PdPair { a, b, s, t })
}

/// `(H, K, s, t)` with `e^s e^H ⪯ e^K ⪯ e^t e^H`.
fn exponential_sandwich(smp: &mut Sampler, o: &Overrides) -> Result<(HermitianMatrix, HermitianMatrix, f64, f64)> {
    let [lo, hi] = [o.m.unwrap_or(H_RANGE[0]), o.big_m.unwrap_or(H_RANGE[1])];
    match (o.s, o.t) {
        (Some(s), Some(t)) => {
            let n = smp.dim();
            if commuting(smp) {
                let h_vals: Vec<f64> = (0..n).map(|_| smp.uniform(lo, hi)).collect();
                let k_vals: Vec<f64> = h_vals.iter().map(|x| x + smp.uniform(s, t)).collect();
                let basis = smp.haar_unitary(n);
                let h = SpectralDecomposition::sorted(h_vals, basis.clone()).reconstruct();
                let k = SpectralDecomposition::sorted(k_vals, basis).reconstruct();
                Ok((h, k, s, t))
            } else {
                let c = (t - s) / 2.0;
                let h = smp.random_bounded_hermitian_in(0.0, c)?;
                let k = smp.random_bounded_hermitian_in(s + c, t)?;
                Ok((h, k, s, t))
            }
        }
        _ => {
            let pair = smp.olson_exponential_pair(lo, hi)?;
            let (s, t) = tight_log_bounds(&pair.h, &pair.k)?.unwrap_or((pair.s, pair.t));
            Ok((pair.h, pair.k, s, t))
        }
    }
}

fn range(o: &Overrides, default: [f64; 2]) -> (f64, f64) {
    (o.m.unwrap_or(default[0]), o.big_m.unwrap_or(default[1]))
}

fn certify_instance(id: InequalityId, o: &Overrides, smp: &mut Sampler) -> Result<InequalityReport> {
    use InequalityId::*;
    let d = draw_parameters(id, o, smp);
    let n = smp.dim();
    match id {
        SpechtPowerLow => {
            let (s, t) = match (o.s, o.t) {
                (Some(s), Some(t)) => (s, t),
                _ => (smp.uniform(0.3, 1.0), smp.uniform(1.0, 3.0)),
            };
            let pair = smp.sandwich_pair(s, t)?;
            certify_specht_power_low(&pair.a, &pair.b, s, t, d.alpha, d.r)
        }
        SpechtEigenHigh | SpechtPowerPair => {
            let pair = match (o.s, o.t) {
                (Some(s), Some(t)) => olson_sandwich_with(smp, s, t)?,
                _ => {
                    let pair = smp.olson_sandwich_pair()?;
                    let (s, t) = tight_ratio_bounds(&pair.a, &pair.b)?.unwrap_or((pair.s, pair.t));
                    PdPair { s, t, ..pair }
                }
            };
            if id == SpechtEigenHigh {
                certify_eigen_power_high(&pair.a, &pair.b, pair.s, pair.t, d.alpha, d.r)
            } else {
                certify_pq_reverse(&pair.a, &pair.b, pair.s, pair.t, d.alpha, d.q, d.p)
            }
        }
        BoundedPowerLow | BoundedEigenHigh | BoundedPowerPair => {
            let (m, big_m) = range(o, PD_RANGE);
            let a = smp.random_pd_in(m, big_m)?;
            let b = smp.random_pd_in(m, big_m)?;
            let form = match id {
                BoundedPowerLow => BoundedForm::PowerLow { r: d.r },
                BoundedEigenHigh => BoundedForm::EigenHigh { r: d.r },
                _ => BoundedForm::PowerPair { q: d.q, p: d.p },
            };
            certify_bounded_corollary(&a, &b, m, big_m, d.alpha, form)
        }
        GtSpecht | GtSpechtNorm | GtSpechtSquared | GtKantorovich => {
            let (h, k, s, t) = exponential_sandwich(smp, o)?;
            match id {
                GtSpecht => certify_gt_reverse_specht(&h, &k, s, t, d.alpha, d.p),
                GtSpechtNorm => certify_gt_reverse_norm(&h, &k, s, t, d.alpha, d.p, &NormId::family(n)),
                GtSpechtSquared => certify_gt_specht_squared(&h, &k, s, t, &NormId::family(n)),
                _ => certify_gt_reverse_kantorovich(&h, &k, s, t, d.alpha, d.p),
            }
        }
        GtSpechtBounded | GtKantorovichBounded | GtKantorovichSquared => {
            let (m, big_m) = range(o, H_RANGE);
            let h = smp.random_bounded_hermitian_in(m, big_m)?;
            let k = smp.random_bounded_hermitian_in(m, big_m)?;
            match id {
                GtSpechtBounded => certify_gt_bounded_specht(&h, &k, m, big_m, d.alpha, d.p),
                GtKantorovichBounded => certify_gt_kantorovich_bounded(&h, &k, m, big_m, d.alpha, d.p),
                _ => certify_gt_kantorovich_squared(&h, &k, m, big_m),
            }
        }
        KantorovichMatrix => {
            let (m, big_m) = range(o, KANTOROVICH_RANGE);
            let a = smp.random_pd_in(m, big_m)?;
            let rows = 1 + (smp.uniform(0.0, n as f64) as usize).min(n - 1);
            let u = smp.random_isometry(rows, n)?;
            certify_kantorovich_matrix(&a, m, big_m, &u)
        }
        FmPowerLow => {
            let (m, big_m) = range(o, FM_RANGE);
            let (a, b) = smp.ordered_pd_pair(m, big_m, PairOrdering::Loewner)?;
            certify_fm_low(&a, &b, m, big_m, d.alpha, d.r)
        }
        FmEigenHigh | FmPowerPair => {
            let (m, big_m) = range(o, FM_RANGE);
            let (a, b) = smp.ordered_pd_pair(m, big_m, PairOrdering::Olson)?;
            let ex =
                if id == FmEigenHigh { FmExponents::High { r: d.r } } else { FmExponents::Pair { q: d.q, p: d.p } };
            certify_fm_eigen(&a, &b, m, big_m, d.alpha, ex)
        }
        GtFm => {
            let (m, big_m) = range(o, FM_EXP_RANGE);
            let (h, k) = smp.ordered_exponential_pair(m, big_m)?;
            certify_fm_gt(&h, &k, m, big_m, d.alpha, d.p)
        }
        AndoHiai => {
            let (m, big_m) = range(o, PD_RANGE);
            let a = smp.random_pd_in(m, big_m)?;
            let b = smp.random_pd_in(m, big_m)?;
            certify_ando_hiai(&a, &b, d.alpha, d.r)
        }
        GoldenThompson | GtForwardNorm => {
            let (m, big_m) = range(o, [-2.0, 2.0]);
            let h = smp.random_bounded_hermitian_in(m, big_m)?;
            let k = smp.random_bounded_hermitian_in(m, big_m)?;
            if id == GoldenThompson {
                certify_golden_thompson(&h, &k)
            } else {
                certify_gt_forward_norm(&h, &k, d.alpha, d.p, &NormId::family(n))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_id_runs_a_small_campaign() {
        for id in InequalityId::ALL {
            let res = run_campaign(&CampaignConfig::new(id, 5, 20)).unwrap();
            assert!(res.all_hold(), "{id}: {:?}", res.worst());
            assert_eq!(res.outcomes.len(), 20);
            assert!(res.outcomes.iter().enumerate().all(|(i, o)| o.index == i && o.n == 2 + i % 5));
        }
    }

    #[test]
    fn deterministic_and_order_independent() {
        let cfg = CampaignConfig::new(InequalityId::GtSpecht, 7, 12);
        let a = run_campaign(&cfg).unwrap();
        let b = run_campaign(&cfg).unwrap();
        assert_eq!(a.to_json_lines().unwrap(), b.to_json_lines().unwrap());
        assert_eq!(run_instance(&cfg, 9).unwrap(), a.outcomes[9]);
    }

    #[test]
    fn overrides_are_used_and_validated() {
        let mut cfg = CampaignConfig::new(InequalityId::SpechtPowerLow, 1, 6);
        cfg.overrides = Overrides { alpha: Some(0.5), r: Some(0.5), s: Some(0.5), t: Some(2.0), ..Default::default() };
        let res = run_campaign(&cfg).unwrap();
        assert!(res.all_hold());
        for o in &res.outcomes {
            assert_eq!(o.report.parameters["s"], 0.5);
            assert_eq!(o.report.parameters["r"], 0.5);
        }
        cfg.overrides.r = Some(2.0);
        assert!(run_campaign(&cfg).is_err());

        let mut cfg = CampaignConfig::new(InequalityId::GtFm, 1, 4);
        cfg.overrides.big_m = Some(0.5);
        assert!(run_campaign(&cfg).is_err());

        for id in [InequalityId::SpechtEigenHigh, InequalityId::GtKantorovich] {
            let mut cfg = CampaignConfig::new(id, 2, 10);
            cfg.overrides = Overrides { s: Some(0.5), t: Some(1.5), ..Default::default() };
            let res = run_campaign(&cfg).unwrap();
            assert!(res.all_hold(), "{id}: {:?}", res.worst());
        }
    }

    #[test]
    fn csv_shape() {
        let mut cfg = CampaignConfig::new(InequalityId::GtSpecht, 3, 3);
        cfg.dim = Some(3);
        let csv = run_campaign(&cfg).unwrap().to_csv();
        assert_eq!(csv.lines().count(), 1 + 3 * 3);
        let row: Vec<&str> = csv.lines().nth(1).unwrap().split(',').collect();
        assert_eq!(row.len(), 12);
        assert!(row[6].contains('e'));
    }

    #[test]
    fn forced_mode_and_dimension() {
        let mut cfg = CampaignConfig::new(InequalityId::FmEigenHigh, 4, 5);
        cfg.dim = Some(6);
        cfg.commuting = Some(true);
        let res = run_campaign(&cfg).unwrap();
        assert!(res.outcomes.iter().all(|o| o.n == 6 && o.mode == SamplingMode::Commuting));
        assert!(res.all_hold());
    }
}
