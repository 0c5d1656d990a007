//! Seeded samplers producing matrices that satisfy each hypothesis by
//! construction.
//!
//! Randomness comes from ChaCha20 (`rand_chacha::ChaCha20Rng`), a
//! counter-based generator: instance `i` of a campaign draws from stream
//! `2i` of the configured seed, and its shared commuting basis from stream
//! `2i + 1`. Identical configurations therefore give bit-identical output
//! regardless of how instances are scheduled.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matcore::{
    exp_from_spectral, HermitianMatrix, Matrix, MatrixLiteral, PositiveDefiniteMatrix, SpectralDecomposition,
};
use crate::orders::{olson_leq, sandwich_bounds, OrderCertificate, DEFAULT_OLSON_GRID};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SamplingMode {
    /// A fresh Haar-random eigenbasis for every matrix.
    General,
    /// All matrices drawn from one sampler share an eigenbasis.
    Commuting,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SamplerConfig {
    pub dim: usize,
    pub seed: u64,
    /// `[lo, hi]`; positive for positive definite targets.
    pub spectral_range: [f64; 2],
    pub mode: SamplingMode,
}

impl SamplerConfig {
    pub fn new(dim: usize, seed: u64, lo: f64, hi: f64, mode: SamplingMode) -> Self {
        Self { dim, seed, spectral_range: [lo, hi], mode }
    }

    pub fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(Error::InvalidParameter("dim must be at least 1".into()));
        }
        let [lo, hi] = self.spectral_range;
        check_range(lo, hi)
    }

    pub fn from_json(json: &str) -> Result<Self> {
        let cfg: Self = serde_json::from_str(json).map_err(|e| Error::InvalidParameter(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }
}

fn check_range(lo: f64, hi: f64) -> Result<()> {
    if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
        return Err(Error::BadRange(format!("[{lo}, {hi}]")));
    }
    Ok(())
}

fn check_positive_range(lo: f64, hi: f64) -> Result<()> {
    check_range(lo, hi)?;
    if lo <= 0.0 {
        return Err(Error::BadRange(format!("[{lo}, {hi}] must be positive")));
    }
    Ok(())
}

/// A positive definite pair with the scalars of its hypothesis.
#[derive(Debug, Clone, PartialEq)]
pub struct PdPair {
    pub a: PositiveDefiniteMatrix,
    pub b: PositiveDefiniteMatrix,
    pub s: f64,
    pub t: f64,
}

/// Hermitian pair with `e^s e^H ⪯_ols e^K ⪯_ols e^t e^H`, built from
/// `mI <= H, K <= MI` with `s = m - M`, `t = M - m`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExponentialPair {
    pub h: HermitianMatrix,
    pub k: HermitianMatrix,
    pub m: f64,
    pub big_m: f64,
    pub s: f64,
    pub t: f64,
    pub lower: OrderCertificate,
    pub upper: OrderCertificate,
}

/// Serializable form of an [`ExponentialPair`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExponentialPairRecord {
    pub h: MatrixLiteral,
    pub k: MatrixLiteral,
    pub m: f64,
    #[serde(rename = "M")]
    pub big_m: f64,
    pub s: f64,
    pub t: f64,
    pub lower: OrderCertificate,
    pub upper: OrderCertificate,
}

impl From<&ExponentialPair> for ExponentialPairRecord {
    fn from(p: &ExponentialPair) -> Self {
        Self {
            h: MatrixLiteral::from(&p.h),
            k: MatrixLiteral::from(&p.k),
            m: p.m,
            big_m: p.big_m,
            s: p.s,
            t: p.t,
            lower: p.lower.clone(),
            upper: p.upper.clone(),
        }
    }
}

/// Which order an ordered pair must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairOrdering {
    Loewner,
    Olson,
}

pub struct Sampler {
    cfg: SamplerConfig,
    rng: ChaCha20Rng,
    basis_stream: u64,
    basis: Option<Matrix>,
}

impl Sampler {
    pub fn new(cfg: SamplerConfig) -> Result<Self> {
        Self::for_instance(cfg, 0)
    }

    /// Sampler for instance `index` of a campaign.
    pub fn for_instance(cfg: SamplerConfig, index: u64) -> Result<Self> {
        cfg.validate()?;
        let mut rng = ChaCha20Rng::seed_from_u64(cfg.seed);
        rng.set_stream(2 * index);
        Ok(Self { cfg, rng, basis_stream: 2 * index + 1, basis: None })
    }

    pub fn config(&self) -> &SamplerConfig {
        &self.cfg
    }

    pub fn dim(&self) -> usize {
        self.cfg.dim
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        if lo == hi {
            return lo;
        }
        lo + (hi - lo) * self.rng.random::<f64>()
    }

    /// Haar-distributed unitary: Gram–Schmidt on a complex Gaussian matrix,
    /// with the triangular factor's diagonal kept positive.
    pub fn haar_unitary(&mut self, n: usize) -> Matrix {
        haar_from(&mut self.rng, n)
    }

    /// First `k` rows of a Haar unitary: `U U* = I_k`.
    pub fn random_isometry(&mut self, k: usize, n: usize) -> Result<Matrix> {
        if k == 0 || k > n {
            return Err(Error::InvalidParameter(format!("isometry rows {k} must lie in 1..={n}")));
        }
        let u = self.haar_unitary(n);
        Ok(Matrix::from_fn(k, n, |i, j| u[(i, j)]))
    }

    fn basis(&mut self) -> Matrix {
        match self.cfg.mode {
            SamplingMode::General => self.haar_unitary(self.cfg.dim),
            SamplingMode::Commuting => {
                if self.basis.is_none() {
                    let mut rng = ChaCha20Rng::seed_from_u64(self.cfg.seed);
                    rng.set_stream(self.basis_stream);
                    self.basis = Some(haar_from(&mut rng, self.cfg.dim));
                }
                self.basis.clone().expect("basis initialised")
            }
        }
    }

    fn spectrum(&mut self, lo: f64, hi: f64) -> Vec<f64> {
        (0..self.cfg.dim).map(|_| self.uniform(lo, hi)).collect()
    }

    fn decomposition(&mut self, values: Vec<f64>) -> SpectralDecomposition {
        let basis = self.basis();
        SpectralDecomposition::sorted(values, basis)
    }

    /// `V diag(u) V*` with `u` uniform in the configured range.
    pub fn random_pd(&mut self) -> Result<PositiveDefiniteMatrix> {
        let [lo, hi] = self.cfg.spectral_range;
        self.random_pd_in(lo, hi)
    }

    pub fn random_pd_in(&mut self, lo: f64, hi: f64) -> Result<PositiveDefiniteMatrix> {
        check_positive_range(lo, hi)?;
        let values = self.spectrum(lo, hi);
        PositiveDefiniteMatrix::from_spectral(self.decomposition(values))
    }

    pub fn random_bounded_hermitian(&mut self) -> Result<HermitianMatrix> {
        let [lo, hi] = self.cfg.spectral_range;
        self.random_bounded_hermitian_in(lo, hi)
    }

    /// Hermitian matrix with spectrum in `[m, M]`.
    pub fn random_bounded_hermitian_in(&mut self, m: f64, big_m: f64) -> Result<HermitianMatrix> {
        check_range(m, big_m)?;
        let values = self.spectrum(m, big_m);
        Ok(self.decomposition(values).reconstruct())
    }

    /// `(A, B)` with `sA <= B <= tA`: `B = A^{1/2} C A^{1/2}` where `C` has
    /// spectrum in `[s, t]`. In commuting mode `A`, `C` and `B` share a basis.
    pub fn sandwich_pair(&mut self, s: f64, t: f64) -> Result<PdPair> {
        check_positive_range(s, t)?;
        let a = self.random_pd()?;
        let c_values = self.spectrum(s, t);
        let b = match self.cfg.mode {
            SamplingMode::Commuting => {
                // C = V diag(c) V* in A's eigenbasis, so B = A C multiplies eigenvalues
                let products = a.eigenvalues().iter().zip(&c_values).map(|(x, c)| x * c).collect();
                PositiveDefiniteMatrix::from_spectral(SpectralDecomposition::sorted(
                    products,
                    a.spectral().eigenvectors.clone(),
                ))?
            }
            SamplingMode::General => {
                let c = PositiveDefiniteMatrix::from_spectral(self.decomposition(c_values))?;
                let sqrt_a = a.spectral().map(f64::sqrt)?.reconstruct();
                PositiveDefiniteMatrix::new(c.hermitian().congruence(sqrt_a.as_matrix())?)?
            }
        };
        Ok(PdPair { a, b, s, t })
    }

    /// Pair with `sA ⪯_ols B ⪯_ols tA` guaranteed by construction.
    ///
    /// General mode draws both matrices with spectrum in `[lo, hi]`, giving
    /// `s = lo/hi`, `t = hi/lo`. Commuting mode multiplies the eigenvalues of
    /// `A` by factors in `[lo/hi, hi/lo]` along the shared basis.
    pub fn olson_sandwich_pair(&mut self) -> Result<PdPair> {
        let [lo, hi] = self.cfg.spectral_range;
        check_positive_range(lo, hi)?;
        let (s, t) = (lo / hi, hi / lo);
        match self.cfg.mode {
            SamplingMode::General => {
                let a = self.random_pd()?;
                let b = self.random_pd()?;
                Ok(PdPair { a, b, s, t })
            }
            SamplingMode::Commuting => self.sandwich_pair(s, t),
        }
    }

    /// `H, K` with spectra in `[m, M]` plus Olson certificates for
    /// `e^{m-M} e^H ⪯ e^K ⪯ e^{M-m} e^H`.
    pub fn olson_exponential_pair(&mut self, m: f64, big_m: f64) -> Result<ExponentialPair> {
        let h = self.random_bounded_hermitian_in(m, big_m)?;
        let k = self.random_bounded_hermitian_in(m, big_m)?;
        exponential_pair_certified(h, k, m, big_m)
    }

    /// `(A, B)` with `mI <= A <= B <= MI` in the requested order.
    ///
    /// Commuting mode pairs sorted eigenvalue draws along the shared basis
    /// (exact for both orders). General mode uses `B = A + D` with `D >= 0`
    /// for the Loewner order, and separated spectra `A ∈ [m, c]`,
    /// `B ∈ [c, M]` for the Olson order.
    pub fn ordered_pd_pair(
        &mut self,
        m: f64,
        big_m: f64,
        ordering: PairOrdering,
    ) -> Result<(PositiveDefiniteMatrix, PositiveDefiniteMatrix)> {
        check_positive_range(m, big_m)?;
        let (a, b) = self.ordered_spectral_pair(m, big_m, ordering)?;
        Ok((PositiveDefiniteMatrix::from_spectral(a)?, PositiveDefiniteMatrix::from_spectral(b)?))
    }

    /// `(H, K)` with spectra in `[m, M]` and `e^H ⪯_ols e^K`.
    pub fn ordered_exponential_pair(&mut self, m: f64, big_m: f64) -> Result<(HermitianMatrix, HermitianMatrix)> {
        check_range(m, big_m)?;
        let (h, k) = self.ordered_spectral_pair(m, big_m, PairOrdering::Olson)?;
        Ok((h.reconstruct(), k.reconstruct()))
    }

    fn ordered_spectral_pair(
        &mut self,
        m: f64,
        big_m: f64,
        ordering: PairOrdering,
    ) -> Result<(SpectralDecomposition, SpectralDecomposition)> {
        let n = self.cfg.dim;
        match (self.cfg.mode, ordering) {
            (SamplingMode::Commuting, _) => {
                let basis = self.basis();
                let mut lower = Vec::with_capacity(n);
                let mut upper = Vec::with_capacity(n);
                for _ in 0..n {
                    let x = self.uniform(m, big_m);
                    let y = self.uniform(m, big_m);
                    lower.push(x.min(y));
                    upper.push(x.max(y));
                }
                Ok((SpectralDecomposition::sorted(lower, basis.clone()), SpectralDecomposition::sorted(upper, basis)))
            }
            (SamplingMode::General, PairOrdering::Olson) => {
                let split = m + (big_m - m) * self.uniform(0.3, 0.7);
                let lower = self.spectrum(m, split);
                let a = self.decomposition(lower);
                let upper = self.spectrum(split, big_m);
                let b = self.decomposition(upper);
                Ok((a, b))
            }
            (SamplingMode::General, PairOrdering::Loewner) => {
                let split = m + (big_m - m) * self.uniform(0.3, 0.7);
                let lower = self.spectrum(m, split);
                let a = self.decomposition(lower);
                let room = big_m - a.eigenvalues[0];
                let bump = self.spectrum(0.0, room);
                let d = self.decomposition(bump).reconstruct();
                let b = a.reconstruct().add(&d)?.decompose()?;
                Ok((a, b))
            }
        }
    }
}

/// Attaches Olson certificates for `e^{m-M} e^H ⪯ e^K ⪯ e^{M-m} e^H`.
pub fn exponential_pair_certified(
    h: HermitianMatrix,
    k: HermitianMatrix,
    m: f64,
    big_m: f64,
) -> Result<ExponentialPair> {
    let (s, t) = (m - big_m, big_m - m);
    let eh = exp_from_spectral(&h.decompose()?)?;
    let ek = exp_from_spectral(&k.decompose()?)?;
    let lower = olson_leq(&eh.scale(s.exp())?, &ek, &DEFAULT_OLSON_GRID)?;
    let upper = olson_leq(&ek, &eh.scale(t.exp())?, &DEFAULT_OLSON_GRID)?;
    Ok(ExponentialPair { h, k, m, big_m, s, t, lower, upper })
}

/// `sandwich_bounds(A, B) ⊆ [s - 1e-9, t + 1e-9]`.
pub fn sandwich_certificate(pair: &PdPair) -> Result<bool> {
    let (lo, hi) = sandwich_bounds(&pair.a, &pair.b)?;
    Ok(lo >= pair.s - 1e-9 && hi <= pair.t + 1e-9)
}

fn haar_from(rng: &mut ChaCha20Rng, n: usize) -> Matrix {
    let mut cols: Vec<Vec<Complex64>> = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| {
                    let re: f64 = StandardNormal.sample(rng);
                    let im: f64 = StandardNormal.sample(rng);
                    Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
                })
                .collect()
        })
        .collect();
    // modified Gram–Schmidt; R_jj = ‖v_j‖ > 0 keeps the Haar measure
    for j in 0..n {
        for i in 0..j {
            let (done, rest) = cols.split_at_mut(j);
            let qi = &done[i];
            let vj = &mut rest[0];
            let proj: Complex64 = qi.iter().zip(vj.iter()).map(|(q, v)| q.conj() * v).sum();
            for (v, q) in vj.iter_mut().zip(qi) {
                *v -= proj * q;
            }
        }
        let norm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for v in cols[j].iter_mut() {
            *v /= norm;
        }
    }
    Matrix::from_fn(n, n, |i, j| cols[j][i])
}

/// `random_pd` with a fresh sampler for `cfg`.
pub fn random_pd(cfg: &SamplerConfig) -> Result<PositiveDefiniteMatrix> {
    Sampler::new(cfg.clone())?.random_pd()
}

/// `random_bounded_hermitian` with a fresh sampler for `cfg`.
pub fn random_bounded_hermitian(cfg: &SamplerConfig) -> Result<HermitianMatrix> {
    Sampler::new(cfg.clone())?.random_bounded_hermitian()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(mode: SamplingMode) -> SamplerConfig {
        SamplerConfig::new(4, 11, 0.5, 3.0, mode)
    }

    #[test]
    fn haar_unitary_is_unitary() {
        let mut s = Sampler::new(cfg(SamplingMode::General)).unwrap();
        let u = s.haar_unitary(6);
        assert!(u.adjoint().matmul(&u).sub(&Matrix::identity(6)).frobenius_norm() < 1e-13);
    }

    #[test]
    fn unit_range_gives_identity() {
        let c = SamplerConfig::new(5, 3, 1.0, 1.0, SamplingMode::General);
        let a = random_pd(&c).unwrap();
        assert!(a.as_matrix().sub(&Matrix::identity(5)).frobenius_norm() < 1e-12);
    }

    #[test]
    fn zero_range_gives_zero_matrix() {
        let c = SamplerConfig::new(3, 3, 0.0, 0.0, SamplingMode::General);
        let h = random_bounded_hermitian(&c).unwrap();
        assert_eq!(h.frobenius_norm(), 0.0);
    }

    #[test]
    fn determinism() {
        let c = cfg(SamplingMode::General);
        assert_eq!(random_pd(&c).unwrap(), random_pd(&c).unwrap());
        let mut a = Sampler::for_instance(c.clone(), 7).unwrap();
        let mut b = Sampler::for_instance(c, 7).unwrap();
        assert_eq!(a.sandwich_pair(0.5, 2.0).unwrap(), b.sandwich_pair(0.5, 2.0).unwrap());
    }

    #[test]
    fn bad_ranges() {
        let c = SamplerConfig::new(3, 1, 2.0, 1.0, SamplingMode::General);
        assert!(matches!(Sampler::new(c), Err(Error::BadRange(_))));
        let c = SamplerConfig::new(3, 1, -1.0, 1.0, SamplingMode::General);
        assert!(matches!(Sampler::new(c).unwrap().random_pd(), Err(Error::BadRange(_))));
        let mut s = Sampler::new(cfg(SamplingMode::General)).unwrap();
        assert!(matches!(s.sandwich_pair(2.0, 1.0), Err(Error::BadRange(_))));
    }

    #[test]
    fn commuting_outputs_commute() {
        let mut s = Sampler::new(SamplerConfig::new(4, 5, -1.0, 2.0, SamplingMode::Commuting)).unwrap();
        let h = s.random_bounded_hermitian().unwrap();
        let k = s.random_bounded_hermitian().unwrap();
        let comm = h.as_matrix().commutator(k.as_matrix()).frobenius_norm();
        assert!(comm < 1e-11, "commutator {comm}");
    }

    #[test]
    fn config_json_round_trip() {
        let c = cfg(SamplingMode::Commuting);
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(SamplerConfig::from_json(&json).unwrap(), c);
        assert!(SamplerConfig::from_json(r#"{"dim":0,"seed":1,"spectral_range":[1,2],"mode":"general"}"#).is_err());
    }

    #[test]
    fn isometry_rows_orthonormal() {
        let mut s = Sampler::new(cfg(SamplingMode::General)).unwrap();
        let u = s.random_isometry(2, 5).unwrap();
        assert!(u.matmul(&u.adjoint()).sub(&Matrix::identity(2)).frobenius_norm() < 1e-13);
        assert!(s.random_isometry(6, 5).is_err());
    }
}
