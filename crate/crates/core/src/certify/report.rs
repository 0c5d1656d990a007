use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::Error;
use crate::matcore::{Matrix, SchattenP};

/// Default relative tolerance for certifier margins.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Every inequality the certifiers know about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InequalityId {
    /// `A^r #_α B^r <= max{S(s),S(t)}^r (A #_α B)^r`, `0 < r <= 1`.
    SpechtPowerLow,
    /// `λ_k(A #_α B)^r <= max{S(s^r),S(t^r)} λ_k(A^r #_α B^r)`, `r >= 1`.
    SpechtEigenHigh,
    /// `λ_k(A^q #_α B^q)^{1/q} <= max{S(s^p),S(t^p)}^{1/p} λ_k(A^p #_α B^p)^{1/p}`.
    SpechtPowerPair,
    /// Bounded-spectrum forms of the three above with `h = M/m`.
    BoundedPowerLow,
    BoundedEigenHigh,
    BoundedPowerPair,
    /// Reverse Golden–Thompson bound with the Specht factor.
    GtSpecht,
    /// Unitarily invariant norm form of [`InequalityId::GtSpecht`].
    GtSpechtNorm,
    /// `‖e^{H+K}‖ <= max{S(e^{2s}),S(e^{2t})} ‖e^{2H} # e^{2K}‖`.
    GtSpechtSquared,
    /// Bounded-spectrum Specht factor `S(e^{(M-m)p})^{1/p}`.
    GtSpechtBounded,
    /// Matrix Kantorovich inequality with an isometry.
    KantorovichMatrix,
    /// Reverse Golden–Thompson bound with `K(e^{p(t-s)}, α)^{-1/p}`.
    GtKantorovich,
    /// Bounded form with `K(e^{2p(M-m)}, α)^{-1/p}`.
    GtKantorovichBounded,
    /// `λ_k(e^{H+K}) <= (e^{2M}+e^{2m})/(2e^{M+m}) λ_k(e^{2H} # e^{2K})`.
    GtKantorovichSquared,
    /// FM forms.
    FmPowerLow,
    FmEigenHigh,
    FmPowerPair,
    GtFm,
    /// Forward baselines.
    AndoHiai,
    GoldenThompson,
    GtForwardNorm,
}

impl InequalityId {
    pub const ALL: [InequalityId; 21] = [
        Self::SpechtPowerLow,
        Self::SpechtEigenHigh,
        Self::SpechtPowerPair,
        Self::BoundedPowerLow,
        Self::BoundedEigenHigh,
        Self::BoundedPowerPair,
        Self::GtSpecht,
        Self::GtSpechtNorm,
        Self::GtSpechtSquared,
        Self::GtSpechtBounded,
        Self::KantorovichMatrix,
        Self::GtKantorovich,
        Self::GtKantorovichBounded,
        Self::GtKantorovichSquared,
        Self::FmPowerLow,
        Self::FmEigenHigh,
        Self::FmPowerPair,
        Self::GtFm,
        Self::AndoHiai,
        Self::GoldenThompson,
        Self::GtForwardNorm,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::SpechtPowerLow => "specht-power-low",
            Self::SpechtEigenHigh => "specht-eigen-high",
            Self::SpechtPowerPair => "specht-power-pair",
            Self::BoundedPowerLow => "bounded-power-low",
            Self::BoundedEigenHigh => "bounded-eigen-high",
            Self::BoundedPowerPair => "bounded-power-pair",
            Self::GtSpecht => "gt-specht",
            Self::GtSpechtNorm => "gt-specht-norm",
            Self::GtSpechtSquared => "gt-specht-squared",
            Self::GtSpechtBounded => "gt-specht-bounded",
            Self::KantorovichMatrix => "kantorovich-matrix",
            Self::GtKantorovich => "gt-kantorovich",
            Self::GtKantorovichBounded => "gt-kantorovich-bounded",
            Self::GtKantorovichSquared => "gt-kantorovich-squared",
            Self::FmPowerLow => "fm-power-low",
            Self::FmEigenHigh => "fm-eigen-high",
            Self::FmPowerPair => "fm-power-pair",
            Self::GtFm => "gt-fm",
            Self::AndoHiai => "ando-hiai",
            Self::GoldenThompson => "golden-thompson",
            Self::GtForwardNorm => "gt-forward-norm",
        }
    }
}

impl fmt::Display for InequalityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for InequalityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Self::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown inequality id '{s}'")))
    }
}

/// What the entries of a report compare.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Comparison {
    /// `X <= Y`: entries are the eigenvalues of `Y - X` (ascending) against 0.
    Loewner,
    /// `λ_k(X) <= λ_k(Y)` for each `k`.
    Eigenvalue,
    /// One entry per unitarily invariant norm.
    Norm,
    /// A single trace comparison.
    Trace,
    /// Cumulative eigenvalue products, plus the reversed determinant entry.
    LogMajorization,
}

/// A unitarily invariant norm from the implemented family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NormId {
    KyFan(usize),
    Schatten(SchattenP),
}

impl NormId {
    /// Ky Fan `1..=n` followed by Schatten 1, 2 and ∞.
    pub fn family(n: usize) -> Vec<NormId> {
        (1..=n)
            .map(NormId::KyFan)
            .chain([SchattenP::One, SchattenP::Two, SchattenP::Infinity].map(NormId::Schatten))
            .collect()
    }

    pub fn label(self) -> String {
        match self {
            NormId::KyFan(k) => format!("ky-fan-{k}"),
            NormId::Schatten(SchattenP::One) => "schatten-1".into(),
            NormId::Schatten(SchattenP::Two) => "schatten-2".into(),
            NormId::Schatten(SchattenP::Infinity) => "schatten-inf".into(),
        }
    }
}

impl FromStr for NormId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "schatten-1" | "trace" => Ok(NormId::Schatten(SchattenP::One)),
            "schatten-2" | "frobenius" => Ok(NormId::Schatten(SchattenP::Two)),
            "schatten-inf" | "operator" => Ok(NormId::Schatten(SchattenP::Infinity)),
            _ => s
                .strip_prefix("ky-fan-")
                .and_then(|k| k.parse().ok())
                .map(NormId::KyFan)
                .ok_or_else(|| Error::InvalidParameter(format!("unknown norm '{s}'"))),
        }
    }
}

/// Per-entry comparison of a certified inequality.
///
/// `margins[i] = rhs_values[i] - lhs_values[i]` and
/// `relative_margins[i] = margins[i] / scales[i]`; the report holds iff the
/// smallest relative margin is at least `-tolerance`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InequalityReport {
    pub inequality: InequalityId,
    pub comparison: Comparison,
    pub parameters: BTreeMap<String, f64>,
    pub factor: f64,
    pub labels: Vec<String>,
    pub lhs_values: Vec<f64>,
    pub rhs_values: Vec<f64>,
    pub margins: Vec<f64>,
    pub scales: Vec<f64>,
    pub relative_margins: Vec<f64>,
    pub holds: bool,
    pub tolerance: f64,
    pub input_digest: String,
}

impl InequalityReport {
    pub fn min_relative_margin(&self) -> f64 {
        self.relative_margins.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Re-evaluates `holds` under a different tolerance.
    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self.holds = self.min_relative_margin() >= -tolerance;
        self
    }

    /// Ky Fan comparison implied by an eigenvalue report: partial sums of the
    /// `k` largest entries on each side.
    pub fn ky_fan_propagation(&self) -> Option<InequalityReport> {
        if self.comparison != Comparison::Eigenvalue {
            return None;
        }
        let partial = |v: &[f64]| -> Vec<f64> {
            v.iter()
                .scan(0.0, |acc, &x| {
                    *acc += x;
                    Some(*acc)
                })
                .collect()
        };
        let lhs = partial(&self.lhs_values);
        let rhs = partial(&self.rhs_values);
        let labels = (1..=lhs.len()).map(|k| NormId::KyFan(k).label()).collect();
        let mut out = Entries::new(labels, lhs, rhs).into_report(
            self.inequality,
            Comparison::Norm,
            self.parameters.clone(),
            self.factor,
            self.input_digest.clone(),
        );
        out = out.with_tolerance(self.tolerance);
        Some(out)
    }
}

/// Entries of a report before margins are derived.
#[derive(Debug, Clone, Default)]
pub(crate) struct Entries {
    labels: Vec<String>,
    lhs: Vec<f64>,
    rhs: Vec<f64>,
    scales: Vec<f64>,
}

impl Entries {
    /// Entries whose scale is `max(|lhs|, |rhs|)`.
    pub fn new(labels: Vec<String>, lhs: Vec<f64>, rhs: Vec<f64>) -> Self {
        let scales = lhs.iter().zip(&rhs).map(|(a, b)| a.abs().max(b.abs())).collect();
        Self { labels, lhs, rhs, scales }
    }

    /// Per-`k` eigenvalue entries.
    pub fn eigen(lhs: Vec<f64>, rhs: Vec<f64>) -> Self {
        let labels = (1..=lhs.len()).map(|k| format!("k = {k}")).collect();
        Self::new(labels, lhs, rhs)
    }

    pub fn with_scales(labels: Vec<String>, lhs: Vec<f64>, rhs: Vec<f64>, scales: Vec<f64>) -> Self {
        Self { labels, lhs, rhs, scales }
    }

    pub fn into_report(
        self,
        inequality: InequalityId,
        comparison: Comparison,
        parameters: BTreeMap<String, f64>,
        factor: f64,
        input_digest: String,
    ) -> InequalityReport {
        assert_eq!(self.lhs.len(), self.rhs.len());
        assert_eq!(self.lhs.len(), self.labels.len());
        let margins: Vec<f64> = self.rhs.iter().zip(&self.lhs).map(|(r, l)| r - l).collect();
        let relative_margins =
            margins.iter().zip(&self.scales).map(|(&m, &s)| if s > 0.0 { m / s } else { m }).collect();
        InequalityReport {
            inequality,
            comparison,
            parameters,
            factor,
            labels: self.labels,
            lhs_values: self.lhs,
            rhs_values: self.rhs,
            margins,
            scales: self.scales,
            relative_margins,
            holds: false,
            tolerance: DEFAULT_TOLERANCE,
            input_digest,
        }
        .with_tolerance(DEFAULT_TOLERANCE)
    }
}

/// SHA-256 over dimensions and IEEE bit patterns of the inputs; first 16 hex
/// digits.
pub(crate) fn digest(matrices: &[&Matrix], scalars: &[f64]) -> String {
    let mut hasher = Sha256::new();
    for m in matrices {
        hasher.update((m.rows() as u64).to_le_bytes());
        hasher.update((m.cols() as u64).to_le_bytes());
        for z in m.as_slice() {
            hasher.update(z.re.to_bits().to_le_bytes());
            hasher.update(z.im.to_bits().to_le_bytes());
        }
    }
    for x in scalars {
        hasher.update(x.to_bits().to_le_bytes());
    }
    hasher.finalize().iter().take(8).map(|b| format!("{b:02x}")).collect()
}

pub(crate) fn params(pairs: &[(&str, f64)]) -> BTreeMap<String, f64> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}
