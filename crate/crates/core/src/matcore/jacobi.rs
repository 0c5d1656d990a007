//! Cyclic Jacobi eigensolver for complex Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a_pq` with a diagonal
//! unitary and then applies the classical real rotation that annihilates the
//! (now real) pivot. Sweeps run over all `p < q` in row order until the
//! off-diagonal Frobenius mass drops below `OFF_TOLERANCE · ‖A‖_F`.

use num_complex::Complex64;

use super::matrix::Matrix;
use crate::error::{Error, Result};

pub const OFF_TOLERANCE: f64 = 1e-14;
pub const MAX_SWEEPS: usize = 100;

fn off_diagonal_mass(a: &Matrix) -> f64 {
    let n = a.rows();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[(i, j)].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

/// Returns unsorted eigenvalues and the matrix whose columns are the
/// corresponding orthonormal eigenvectors.
pub(crate) fn jacobi_eigen(input: &Matrix) -> Result<(Vec<f64>, Matrix)> {
    let n = input.rows();
    let mut a = input.clone();
    let mut v = Matrix::identity(n);
    let scale = input.frobenius_norm();
    let target = OFF_TOLERANCE * scale;

    for i in 0..n {
        a[(i, i)].im = 0.0;
    }

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_mass(&a);
        if off <= target {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let eigenvalues = (0..n).map(|i| a[(i, i)].re).collect();
    Ok((eigenvalues, v))
}

fn rotate(a: &mut Matrix, v: &mut Matrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let g = apq.norm();
    if g == 0.0 {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let theta = (aqq - app) / (2.0 * g);
    let t =
        if theta.abs() > 1e150 { 0.5 / theta } else { theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt()) };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let phase = (apq / g).conj();

    // J restricted to the (p, q) plane: [[c, s], [-s·phase, c·phase]]
    let jpp = Complex64::new(c, 0.0);
    let jpq = Complex64::new(s, 0.0);
    let jqp = phase * (-s);
    let jqq = phase * c;

    let n = a.rows();
    // A <- A J ; V <- V J
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * jpp + akq * jqp;
        a[(k, q)] = akp * jpq + akq * jqq;

        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * jpp + vkq * jqp;
        v[(k, q)] = vkp * jpq + vkq * jqq;
    }
    // A <- J* A
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = jpp.conj() * apk + jqp.conj() * aqk;
        a[(q, k)] = jpq.conj() * apk + jqq.conj() * aqk;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)].im = 0.0;
    a[(q, q)].im = 0.0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_rotation_diagonalises_complex_2x2() {
        let a = Matrix::from_rows(&[
            vec![Complex64::new(2.0, 0.0), Complex64::new(1.0, 1.0)],
            vec![Complex64::new(1.0, -1.0), Complex64::new(3.0, 0.0)],
        ])
        .unwrap();
        let (mut vals, v) = jacobi_eigen(&a).unwrap();
        vals.sort_by(|x, y| y.partial_cmp(x).unwrap());
        // λ = (5 ± sqrt(1 + 8)) / 2
        assert!((vals[0] - 4.0).abs() < 1e-14);
        assert!((vals[1] - 1.0).abs() < 1e-14);
        let vv = v.adjoint().matmul(&v);
        assert!(vv.sub(&Matrix::identity(2)).frobenius_norm() < 1e-14);
    }

    #[test]
    fn zero_matrix_converges_immediately() {
        let (vals, v) = jacobi_eigen(&Matrix::zeros(3, 3)).unwrap();
        assert_eq!(vals, vec![0.0; 3]);
        assert_eq!(v, Matrix::identity(3));
    }
}
