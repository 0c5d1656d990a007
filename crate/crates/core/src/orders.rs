//! Order relations between Hermitian / positive definite matrices.
//!
//! Each check returns an [`OrderCertificate`] carrying the worst margin, the
//! witness that attains it and the tolerance used, so that
//! `holds == (worst_margin >= -tolerance)`.
//!
//! The Olson order (`A^r <= B^r` for every `r >= 1`) cannot be decided by a
//! finite computation in general. [`olson_leq`] certifies it exactly in two
//! situations and falls back to grid evidence otherwise:
//!
//! * commuting pairs: `A^r <= B^r` for all `r` iff the paired eigenvalues in a
//!   common eigenbasis satisfy `a_i <= b_i`;
//! * separated spectra: `λ_max(A) <= λ_min(B)` gives
//!   `A^r <= λ_max(A)^r I <= λ_min(B)^r I <= B^r`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matcore::{check_dims, power, HermitianMatrix, Matrix, PositiveDefiniteMatrix};

/// Loewner tolerance relative to the larger Frobenius norm of the operands.
pub const LOEWNER_RTOL: f64 = 1e-10;
/// Absolute floor for Loewner comparisons between (near) zero matrices.
pub const LOEWNER_ATOL: f64 = 1e-12;
/// Relative tolerance on cumulative eigenvalue products.
pub const MAJORIZATION_RTOL: f64 = 1e-9;
/// Relative commutator size below which a pair is treated as commuting.
pub const COMMUTING_RTOL: f64 = 1e-10;

pub const DEFAULT_OLSON_GRID: [f64; 8] = [1.0, 1.25, 1.5, 2.0, 3.0, 4.0, 6.0, 8.0];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Loewner,
    Sandwich,
    Olson,
    WeakLogMajorization,
    LogMajorization,
}

/// How much a certificate proves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateMode {
    /// A complete finite check of the relation.
    Exact,
    /// Olson order checked only on a finite exponent grid.
    GridEvidence,
    /// Olson order decided through a common eigenbasis.
    CommutingExact,
    /// Olson order implied by `λ_max(A) <= λ_min(B)`.
    SpectralGapExact,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub label: String,
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrderCertificate {
    pub relation: Relation,
    pub mode: CertificateMode,
    pub holds: bool,
    pub worst_margin: f64,
    pub witness: String,
    pub tolerance: f64,
    pub margins: Vec<Witness>,
}

impl OrderCertificate {
    fn from_margins(relation: Relation, mode: CertificateMode, margins: Vec<Witness>, tolerance: f64) -> Self {
        let worst = margins.iter().min_by(|a, b| a.margin.total_cmp(&b.margin)).expect("at least one margin");
        Self {
            relation,
            mode,
            holds: worst.margin >= -tolerance,
            worst_margin: worst.margin,
            witness: worst.label.clone(),
            tolerance,
            margins,
        }
    }
}

fn min_eigenvalue(h: &HermitianMatrix) -> Result<f64> {
    Ok(*h.eigenvalues_desc()?.last().expect("dim >= 1"))
}

/// `A <= B` in the Loewner order, via `λ_min(B - A)`.
///
/// The margin is absolute; the tolerance is
/// `max(1e-10 · max(‖A‖_F, ‖B‖_F), 1e-12)`.
pub fn loewner_leq(a: &HermitianMatrix, b: &HermitianMatrix) -> Result<OrderCertificate> {
    check_dims(a.dim(), b.dim())?;
    let margin = min_eigenvalue(&b.sub(a)?)?;
    let tolerance = (LOEWNER_RTOL * a.frobenius_norm().max(b.frobenius_norm())).max(LOEWNER_ATOL);
    Ok(OrderCertificate::from_margins(
        Relation::Loewner,
        CertificateMode::Exact,
        vec![Witness { label: "lambda_min(B - A)".into(), margin }],
        tolerance,
    ))
}

/// Tightest `s, t` with `sA <= B <= tA`: the extreme eigenvalues of
/// `A^{-1/2} B A^{-1/2}`.
pub fn sandwich_bounds(a: &PositiveDefiniteMatrix, b: &PositiveDefiniteMatrix) -> Result<(f64, f64)> {
    check_dims(a.dim(), b.dim())?;
    a.check_condition()?;
    let inv_sqrt = a.spectral().map(|x| 1.0 / x.sqrt())?.reconstruct();
    let vals = b.hermitian().congruence(inv_sqrt.as_matrix())?.eigenvalues_desc()?;
    Ok((*vals.last().expect("dim >= 1"), vals[0]))
}

/// Joint eigenvalues `(a_i, b_i)` of a commuting pair, or `None` if the pair
/// does not commute to within [`COMMUTING_RTOL`].
pub fn joint_eigenvalues(a: &HermitianMatrix, b: &HermitianMatrix) -> Result<Option<Vec<(f64, f64)>>> {
    check_dims(a.dim(), b.dim())?;
    let (na, nb) = (a.frobenius_norm(), b.frobenius_norm());
    let comm = a.as_matrix().commutator(b.as_matrix()).frobenius_norm();
    if comm > COMMUTING_RTOL * (na * nb).max(f64::MIN_POSITIVE) {
        return Ok(None);
    }
    // a generic combination shares the common eigenbasis
    let gamma = if nb > 0.0 { 0.618_033_988_749_894_8 * na.max(1.0) / nb } else { 0.0 };
    let basis = a.combine(1.0, b, gamma)?.decompose()?.eigenvectors;
    let da = a.congruence(&basis.adjoint())?;
    let db = b.congruence(&basis.adjoint())?;
    let n = a.dim();
    let off = |m: &Matrix| {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += m[(i, j)].norm_sqr();
                }
            }
        }
        s.sqrt()
    };
    let scale = na.max(nb).max(f64::MIN_POSITIVE);
    if off(da.as_matrix()) > 1e-9 * scale || off(db.as_matrix()) > 1e-9 * scale {
        return Ok(None);
    }
    Ok(Some((0..n).map(|i| (da.as_matrix()[(i, i)].re, db.as_matrix()[(i, i)].re)).collect()))
}

fn check_grid(grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::BadGrid("empty grid".into()));
    }
    if let Some(r) = grid.iter().find(|&&r| !(r >= 1.0 && r.is_finite())) {
        return Err(Error::BadGrid(format!("exponent {r} is below 1")));
    }
    if !grid.contains(&1.0) {
        return Err(Error::BadGrid("grid must contain r = 1".into()));
    }
    Ok(())
}

/// `A ⪯_ols B`. Margins are relative: each is divided by the spectral scale
/// of the compared objects; the tolerance is [`LOEWNER_RTOL`].
pub fn olson_leq(a: &PositiveDefiniteMatrix, b: &PositiveDefiniteMatrix, grid: &[f64]) -> Result<OrderCertificate> {
    check_grid(grid)?;
    check_dims(a.dim(), b.dim())?;

    if let Some(pairs) = joint_eigenvalues(a.hermitian(), b.hermitian())? {
        let margins = pairs
            .iter()
            .enumerate()
            .map(|(i, &(x, y))| Witness { label: format!("pair {i}"), margin: (y - x) / x.max(y) })
            .collect();
        return Ok(OrderCertificate::from_margins(
            Relation::Olson,
            CertificateMode::CommutingExact,
            margins,
            LOEWNER_RTOL,
        ));
    }

    let gap = b.min_eigenvalue() - a.max_eigenvalue();
    if gap >= 0.0 {
        return Ok(OrderCertificate::from_margins(
            Relation::Olson,
            CertificateMode::SpectralGapExact,
            vec![Witness { label: "lambda_min(B) - lambda_max(A)".into(), margin: gap / b.max_eigenvalue() }],
            LOEWNER_RTOL,
        ));
    }

    let margins = grid
        .iter()
        .map(|&r| {
            let ar = power(a, r)?;
            let br = power(b, r)?;
            let scale = ar.max_eigenvalue().max(br.max_eigenvalue());
            let m = min_eigenvalue(&br.hermitian().sub(ar.hermitian())?)?;
            Ok(Witness { label: format!("r = {r}"), margin: m / scale })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(OrderCertificate::from_margins(Relation::Olson, CertificateMode::GridEvidence, margins, LOEWNER_RTOL))
}

fn cumulative_products(vals: &[f64]) -> Vec<f64> {
    vals.iter()
        .scan(1.0, |acc, &x| {
            *acc *= x;
            Some(*acc)
        })
        .collect()
}

/// `A ≺_wlog B`: `Π_{j<=k} λ_j(A) <= Π_{j<=k} λ_j(B)` for every `k`.
/// Margins are relative to the products of `B`.
pub fn weak_log_majorizes(a: &PositiveDefiniteMatrix, b: &PositiveDefiniteMatrix) -> Result<OrderCertificate> {
    log_majorization_from_eigenvalues(a.eigenvalues(), b.eigenvalues(), false)
}

/// `A ≺_log B`: weak log-majorization plus equal determinants.
pub fn log_majorizes(a: &PositiveDefiniteMatrix, b: &PositiveDefiniteMatrix) -> Result<OrderCertificate> {
    log_majorization_from_eigenvalues(a.eigenvalues(), b.eigenvalues(), true)
}

/// Log-majorization between two nonincreasing positive spectra.
pub fn log_majorization_from_eigenvalues(a: &[f64], b: &[f64], with_determinant: bool) -> Result<OrderCertificate> {
    check_dims(a.len(), b.len())?;
    let pa = cumulative_products(a);
    let pb = cumulative_products(b);
    let mut margins: Vec<Witness> = pa
        .iter()
        .zip(&pb)
        .enumerate()
        .map(|(k, (x, y))| Witness { label: format!("k = {}", k + 1), margin: (y - x) / y })
        .collect();
    let relation = if with_determinant {
        let (x, y) = (pa[pa.len() - 1], pb[pb.len() - 1]);
        margins.push(Witness { label: "det(A) >= det(B)".into(), margin: (x - y) / y });
        Relation::LogMajorization
    } else {
        Relation::WeakLogMajorization
    };
    Ok(OrderCertificate::from_margins(relation, CertificateMode::Exact, margins, MAJORIZATION_RTOL))
}
