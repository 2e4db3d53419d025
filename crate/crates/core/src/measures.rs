//! Concurrence, entanglement of formation and linear entropy of two-qubit states.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, kron, pauli, sqrt_psd, ComplexMatrix, PSD_CLAMP};
use crate::states::DensityMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeasureRecord {
    pub concurrence: f64,
    pub eof: f64,
    pub linear_entropy: f64,
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

/// Spin-flipped state (σy⊗σy) ρ* (σy⊗σy).
pub fn spin_flip(rho: &ComplexMatrix) -> ComplexMatrix {
    let yy = kron(&pauli::y(), &pauli::y());
    yy.matmul(&rho.conj()).matmul(&yy)
}

/// Wootters λ's: square roots of the eigenvalues of √ρ ρ̃ √ρ, descending.
pub fn wootters_lambdas(rho: &DensityMatrix) -> Result<[f64; 4]> {
    require_two_qubits(rho)?;
    let root = sqrt_psd(rho.matrix())?;
    let r = root.matmul(&spin_flip(rho.matrix())).matmul(&root);
    // Hermitian up to rounding in the triple product.
    let r = (&r + &r.adjoint()).scale_real(0.5);
    let values = hermitian_eig(&r)?.values;
    let mut out = [0.0; 4];
    for (dst, &v) in out.iter_mut().zip(values.iter().rev()) {
        if v < -PSD_CLAMP {
            return Err(Error::NotPositive(v));
        }
        *dst = v.max(0.0).sqrt();
    }
    Ok(out)
}

/// λ₁ − λ₂ − λ₃ − λ₄ before clipping at zero; its sign change locates the onset of entanglement.
pub fn concurrence_margin(rho: &DensityMatrix) -> Result<f64> {
    let l = wootters_lambdas(rho)?;
    Ok(l[0] - l[1] - l[2] - l[3])
}

pub fn concurrence(rho: &DensityMatrix) -> Result<f64> {
    Ok(concurrence_margin(rho)?.clamp(0.0, 1.0))
}

fn binary_entropy(x: f64) -> f64 {
    let term = |p: f64| if p <= 0.0 { 0.0 } else { -p * p.log2() };
    term(x) + term(1.0 - x)
}

/// Entanglement of formation as a function of concurrence.
pub fn eof(c: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&c) {
        return Err(Error::InvalidArgument(format!(
            "concurrence {c} outside [0, 1]"
        )));
    }
    let x = 0.5 * (1.0 + (1.0 - c * c).sqrt());
    Ok(binary_entropy(x))
}

/// (4/3)(1 − Tr ρ²).
pub fn linear_entropy(rho: &DensityMatrix) -> Result<f64> {
    require_two_qubits(rho)?;
    Ok(4.0 / 3.0 * (1.0 - rho.purity()))
}

pub fn measure(rho: &DensityMatrix) -> Result<MeasureRecord> {
    let concurrence = concurrence(rho)?;
    Ok(MeasureRecord {
        concurrence,
        eof: eof(concurrence)?,
        linear_entropy: linear_entropy(rho)?,
    })
}
