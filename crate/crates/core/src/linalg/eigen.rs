//! Hermitian eigendecomposition by cyclic complex Jacobi rotations.

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

/// Largest tolerated entry of `h - h†`.
pub const HERMITIAN_TOL: f64 = 1e-10;
/// Eigenvalues in `[-PSD_CLAMP, 0)` are treated as zero by [`sqrt_psd`].
pub const PSD_CLAMP: f64 = 1e-12;

const OFF_DIAGONAL_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

/// Eigenvalues in ascending order with matching orthonormal eigenvectors (columns).
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    pub fn vector(&self, k: usize) -> Vec<Complex64> {
        let n = self.vectors.dim();
        (0..n).map(|i| self.vectors[(i, k)]).collect()
    }

    /// V diag(f(λ)) V†.
    pub fn reconstruct_with(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let n = self.vectors.dim();
        let mut out = ComplexMatrix::zeros(n);
        for (k, &lambda) in self.values.iter().enumerate() {
            let w = f(lambda);
            if w == 0.0 {
                continue;
            }
            for i in 0..n {
                let vi = self.vectors[(i, k)] * w;
                for j in 0..n {
                    out[(i, j)] += vi * self.vectors[(j, k)].conj();
                }
            }
        }
        out
    }
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

pub fn hermitian_eig(h: &ComplexMatrix) -> Result<HermitianEigen> {
    let err = h.hermiticity_error();
    if err > HERMITIAN_TOL {
        return Err(Error::NotHermitian(err));
    }
    let n = h.dim();
    // Symmetrize so that rotations act on an exactly Hermitian matrix.
    let mut a = (h + &h.adjoint()).scale_real(0.5);
    let mut v = ComplexMatrix::identity(n);

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) < OFF_DIAGONAL_TOL {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    order.sort_by(|&i, &j| diag[i].total_cmp(&diag[j]));

    let values = order.iter().map(|&i| diag[i]).collect();
    let mut vectors = ComplexMatrix::zeros(n);
    for (dst, &src) in order.iter().enumerate() {
        for i in 0..n {
            vectors[(i, dst)] = v[(i, src)];
        }
    }
    Ok(HermitianEigen { values, vectors })
}

/// One Jacobi rotation zeroing `a[p][q]`: A <- J† A J, V <- V J with
/// J = diag(1, e^{-iφ}) · [[c, s], [-s, c]] on the (p, q) plane.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r < f64::MIN_POSITIVE {
        return;
    }
    let phase = apq / r; // e^{iφ}
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let theta = (aqq - app) / (2.0 * r);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    let n = a.dim();
    let e_minus = phase.conj();
    // Columns: B = A J.
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * c - akq * e_minus * s;
        a[(k, q)] = akp * s + akq * e_minus * c;
    }
    // Rows: A' = J† B.
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = apk * c - aqk * phase * s;
        a[(q, k)] = apk * s + aqk * phase * c;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)].im = 0.0;
    a[(q, q)].im = 0.0;

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * c - vkq * e_minus * s;
        v[(k, q)] = vkp * s + vkq * e_minus * c;
    }
}

/// Principal square root of a Hermitian positive semidefinite matrix.
pub fn sqrt_psd(rho: &ComplexMatrix) -> Result<ComplexMatrix> {
    let eig = hermitian_eig(rho)?;
    if let Some(&lowest) = eig.values.first() {
        if lowest < -PSD_CLAMP {
            return Err(Error::NotPositive(lowest));
        }
    }
    Ok(eig.reconstruct_with(|l| l.max(0.0).sqrt()))
}
