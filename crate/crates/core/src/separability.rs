//! Peres-Horodecki tests for two-qubit states and threshold localization in α².

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{det_small, hermitian_eig, ComplexMatrix};
use crate::states::DensityMatrix;

/// Eigenvalues and determinants above `-SEPARABILITY_TOL` count as non-negative.
pub const SEPARABILITY_TOL: f64 = 1e-10;
pub const DEFAULT_THRESHOLD_TOL: f64 = 1e-10;
pub const MAX_BISECTION_STEPS: usize = 200;

const DET_IMAG_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeparabilityVerdict {
    pub w3: f64,
    pub w4: f64,
    pub min_pt_eigenvalue: f64,
    /// Sum of |λ| over the negative eigenvalues of the partial transpose.
    pub negativity: f64,
    pub separable: bool,
}

impl SeparabilityVerdict {
    /// Verdict from the signs of W3 and W4 alone.
    pub fn determinant_separable(&self) -> bool {
        self.w3 >= -SEPARABILITY_TOL && self.w4 >= -SEPARABILITY_TOL
    }
}

fn require_two_qubits(rho: &DensityMatrix) -> Result<()> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            actual: rho.dim(),
        });
    }
    Ok(())
}

/// Partial transpose on the second listed label.
fn transposed(rho: &DensityMatrix) -> Result<ComplexMatrix> {
    require_two_qubits(rho)?;
    rho.partial_transpose(rho.labels()[1])
}

fn real_det(m: &ComplexMatrix) -> Result<f64> {
    let d = det_small(m)?;
    if d.im.abs() > DET_IMAG_TOL {
        return Err(Error::NotHermitian(d.im.abs()));
    }
    Ok(d.re)
}

/// (W3, W4): determinants of the leading 3×3 block and of the whole partial transpose,
/// basis order |00⟩, |01⟩, |10⟩, |11⟩.
pub fn w3_w4(rho: &DensityMatrix) -> Result<(f64, f64)> {
    let pt = transposed(rho)?;
    Ok((real_det(&pt.principal_minor(&[0, 1, 2]))?, real_det(&pt)?))
}

pub fn ppt_verdict(rho: &DensityMatrix) -> Result<SeparabilityVerdict> {
    let pt = transposed(rho)?;
    let w3 = real_det(&pt.principal_minor(&[0, 1, 2]))?;
    let w4 = real_det(&pt)?;
    let spectrum = hermitian_eig(&pt)?.values;
    let min_pt_eigenvalue = spectrum[0];
    let negativity = spectrum
        .iter()
        .filter(|&&l| l < 0.0)
        .fold(0.0, |acc, l| acc - l);
    Ok(SeparabilityVerdict {
        w3,
        w4,
        min_pt_eigenvalue,
        negativity,
        separable: min_pt_eigenvalue >= -SEPARABILITY_TOL,
    })
}

/// Bisection root of `f` on `[lo, hi]`; stops once the bracket is no wider than `tol`.
// Negated comparisons so that NaN inputs are rejected.
#[allow(clippy::neg_cmp_op_on_partial_ord)]
pub fn find_threshold(f: impl Fn(f64) -> f64, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    if !(tol > 0.0) || !(lo < hi) {
        return Err(Error::InvalidArgument(format!(
            "bisection needs lo < hi and tol > 0 (lo={lo}, hi={hi}, tol={tol})"
        )));
    }
    let (mut lo, mut hi) = (lo, hi);
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if !(f_lo.signum() * f_hi.signum() < 0.0) {
        return Err(Error::NoSignChange { lo, hi, f_lo, f_hi });
    }
    for _ in 0..MAX_BISECTION_STEPS {
        if hi - lo <= tol {
            break;
        }
        let mid = lo + 0.5 * (hi - lo);
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo + 0.5 * (hi - lo))
}
