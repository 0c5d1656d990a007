#![allow(dead_code)]

use golden_bounds::{HermitianMatrix, Matrix};
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Hermitian matrix with independent uniform entries in `[-scale, scale]`.
pub fn random_hermitian(rng: &mut ChaCha8Rng, n: usize, scale: f64) -> HermitianMatrix {
    let mut raw = Matrix::zeros(n, n);
    for i in 0..n {
        raw[(i, i)] = Complex64::new(scale * rng.random_range(-1.0..1.0), 0.0);
        for j in i + 1..n {
            let z = Complex64::new(scale * rng.random_range(-1.0..1.0), scale * rng.random_range(-1.0..1.0));
            raw[(i, j)] = z;
            raw[(j, i)] = z.conj();
        }
    }
    HermitianMatrix::new(raw).unwrap()
}

/// Matrix exponential by scaling and squaring of a truncated Taylor series;
/// shares no code with the spectral route.
pub fn taylor_exp(a: &Matrix) -> Matrix {
    let n = a.rows();
    let norm = a.frobenius_norm();
    let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
    let x = a.scale(0.5f64.powi(squarings as i32));
    let mut term = Matrix::identity(n);
    let mut sum = Matrix::identity(n);
    for k in 1..=30 {
        term = term.matmul(&x).scale(1.0 / k as f64);
        sum = sum.add(&term);
    }
    for _ in 0..squarings {
        sum = sum.matmul(&sum);
    }
    sum
}

pub fn relative_distance(a: &Matrix, b: &Matrix) -> f64 {
    a.sub(b).frobenius_norm() / b.frobenius_norm()
}
