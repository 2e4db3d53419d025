//! W-type input states, pure states and density matrices.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{
    hermitian_eig, partial_trace, partial_transpose, ComplexMatrix, Label, QubitRegister,
};

/// Tolerance on α² + β² + γ² = 1 and on state norms.
pub const NORM_TOL: f64 = 1e-12;
/// Tolerance for the density-matrix checks (trace, Hermiticity, positivity).
pub const DENSITY_TOL: f64 = 1e-10;

/// Squared amplitudes of α|001⟩ + β|010⟩ + γ|100⟩ on particles (1, 2, 3).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WParams {
    pub alpha2: f64,
    pub beta2: f64,
    pub gamma2: f64,
}

fn check_open_unit(name: &'static str, value: f64) -> Result<()> {
    if value == 0.0 || value == 1.0 {
        return Err(Error::DegenerateCorner(name));
    }
    if !(value > 0.0 && value < 1.0) {
        return Err(Error::OutOfRange { name, value });
    }
    Ok(())
}

impl WParams {
    pub fn new(alpha2: f64, beta2: f64, gamma2: f64) -> Result<Self> {
        check_open_unit("alpha2", alpha2)?;
        check_open_unit("beta2", beta2)?;
        check_open_unit("gamma2", gamma2)?;
        let sum = alpha2 + beta2 + gamma2;
        if (sum - 1.0).abs() > NORM_TOL {
            return Err(Error::BadNormalization(sum));
        }
        Ok(Self {
            alpha2,
            beta2,
            gamma2,
        })
    }

    /// γ² is fixed by normalization.
    pub fn from_alpha_beta(alpha2: f64, beta2: f64) -> Result<Self> {
        Self::new(alpha2, beta2, 1.0 - alpha2 - beta2)
    }

    /// The β = γ slice of the family.
    pub fn symmetric(alpha2: f64) -> Result<Self> {
        if !(alpha2 > 0.0 && alpha2 < 1.0) {
            return Err(Error::OutOfRange {
                name: "alpha2",
                value: alpha2,
            });
        }
        let rest = (1.0 - alpha2) / 2.0;
        Self::new(alpha2, rest, rest)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha2.sqrt()
    }

    pub fn beta(&self) -> f64 {
        self.beta2.sqrt()
    }

    pub fn gamma(&self) -> f64 {
        self.gamma2.sqrt()
    }

    /// Same parameters with β² and γ² exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            alpha2: self.alpha2,
            beta2: self.gamma2,
            gamma2: self.beta2,
        }
    }
}

/// Shorthand for [`WParams::symmetric`].
pub fn symmetric_params(alpha2: f64) -> Result<WParams> {
    WParams::symmetric(alpha2)
}

/// Normalized amplitude vector over a labeled register.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    register: QubitRegister,
    amplitudes: Vec<Complex64>,
}

impl PureState {
    pub fn new(register: QubitRegister, amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.len() != register.dim() {
            return Err(Error::DimensionMismatch {
                expected: register.dim(),
                actual: amplitudes.len(),
            });
        }
        let norm = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized(norm));
        }
        Ok(Self {
            register,
            amplitudes,
        })
    }

    pub fn register(&self) -> &QubitRegister {
        &self.register
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn inner(&self, other: &PureState) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }
}

/// α|001⟩ + β|010⟩ + γ|100⟩ on register (1, 2, 3), amplitudes real and non-negative.
pub fn w_type_state(p: &WParams) -> Result<PureState> {
    let p = WParams::new(p.alpha2, p.beta2, p.gamma2)?;
    let mut amps = vec![Complex64::new(0.0, 0.0); 8];
    amps[0b001] = Complex64::new(p.alpha(), 0.0);
    amps[0b010] = Complex64::new(p.beta(), 0.0);
    amps[0b100] = Complex64::new(p.gamma(), 0.0);
    PureState::new(QubitRegister::qubits(&[1, 2, 3])?, amps)
}

/// Hermitian, unit-trace, positive semidefinite operator with subsystem labels.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    register: QubitRegister,
}

impl DensityMatrix {
    /// Validates trace, Hermiticity and positivity within [`DENSITY_TOL`].
    pub fn new(matrix: ComplexMatrix, register: QubitRegister) -> Result<Self> {
        let rho = Self::new_unchecked(matrix, register)?;
        rho.validate()?;
        Ok(rho)
    }

    pub(crate) fn new_unchecked(matrix: ComplexMatrix, register: QubitRegister) -> Result<Self> {
        if matrix.dim() != register.dim() {
            return Err(Error::DimensionMismatch {
                expected: register.dim(),
                actual: matrix.dim(),
            });
        }
        Ok(Self { matrix, register })
    }

    /// Two-qubit density matrix on labels (1, 2).
    pub fn two_qubit(matrix: ComplexMatrix) -> Result<Self> {
        Self::new(matrix, QubitRegister::qubits(&[1, 2])?)
    }

    pub fn validate(&self) -> Result<()> {
        let herm = self.matrix.hermiticity_error();
        if herm > DENSITY_TOL {
            return Err(Error::NotHermitian(herm));
        }
        let tr = self.matrix.trace();
        if (tr.re - 1.0).abs() > DENSITY_TOL || tr.im.abs() > DENSITY_TOL {
            return Err(Error::BadTrace(tr.re));
        }
        let lowest = self.min_eigenvalue()?;
        if lowest < -DENSITY_TOL {
            return Err(Error::NotPositive(lowest));
        }
        Ok(())
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn register(&self) -> &QubitRegister {
        &self.register
    }

    pub fn labels(&self) -> &[Label] {
        self.register.labels()
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace().re
    }

    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        Ok(hermitian_eig(&self.matrix)?.values)
    }

    pub fn min_eigenvalue(&self) -> Result<f64> {
        Ok(self.eigenvalues()?[0])
    }

    /// Tr(ρ²), computed as Σ|ρ_ij|² for a Hermitian ρ.
    pub fn purity(&self) -> f64 {
        self.matrix.as_slice().iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn partial_trace(&self, keep: &[Label]) -> Result<DensityMatrix> {
        let (m, reg) = partial_trace(&self.matrix, &self.register, keep)?;
        Ok(Self {
            matrix: m,
            register: reg,
        })
    }

    /// Partial transpose on one label; the result need not be a density matrix.
    pub fn partial_transpose(&self, label: Label) -> Result<ComplexMatrix> {
        partial_transpose(&self.matrix, &self.register, label)
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }
}

/// |ψ⟩⟨ψ|.
pub fn density(psi: &PureState) -> DensityMatrix {
    let m = ComplexMatrix::outer(psi.amplitudes(), psi.amplitudes())
        .expect("ket and bra come from the same vector");
    DensityMatrix {
        matrix: m,
        register: psi.register().clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn w_state_point() {
        let third = 1.0 / 3.0;
        let p = WParams::new(third, third, 1.0 - 2.0 * third).unwrap();
        let psi = w_type_state(&p).unwrap();
        let s = 1.0 / 3f64.sqrt();
        for idx in [1, 2, 4] {
            assert!((psi.amplitudes()[idx].re - s).abs() < 1e-15);
        }
        for idx in [0, 3, 5, 6, 7] {
            assert_eq!(psi.amplitudes()[idx].norm(), 0.0);
        }
    }

    #[test]
    fn corners_rejected_distinctly() {
        assert_eq!(
            WParams::new(1.0, 0.0, 0.0),
            Err(Error::DegenerateCorner("alpha2"))
        );
        assert_eq!(
            WParams::new(0.0, 0.0, 1.0),
            Err(Error::DegenerateCorner("alpha2"))
        );
        assert!(matches!(
            WParams::new(0.5, 0.3, 0.3),
            Err(Error::BadNormalization(_))
        ));
        assert!(matches!(
            WParams::from_alpha_beta(0.1, 0.95),
            Err(Error::OutOfRange { name: "gamma2", .. })
        ));
    }

    #[test]
    fn unbalanced_state_is_normalized() {
        let psi = w_type_state(&WParams::new(0.5, 0.25, 0.25).unwrap()).unwrap();
        assert!((psi.norm_sqr() - 1.0).abs() < 1e-15);
        assert!(psi.amplitudes().iter().all(|a| a.im == 0.0 && a.re >= 0.0));
    }

    #[test]
    fn symmetric_slice() {
        let p = symmetric_params(1.0 / 3.0).unwrap();
        assert!((p.beta2 - 1.0 / 3.0).abs() < 1e-15);
        let p = symmetric_params(0.22).unwrap();
        assert!((p.beta2 - 0.39).abs() < 1e-15 && p.beta2 == p.gamma2);
        assert!(symmetric_params(0.0).is_err());
        assert!(symmetric_params(1.0).is_err());
        assert!(symmetric_params(f64::NAN).is_err());
    }

    #[test]
    fn projectors() {
        let zero = PureState::new(
            QubitRegister::qubits(&[1]).unwrap(),
            vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
        )
        .unwrap();
        assert_eq!(
            density(&zero).into_matrix(),
            ComplexMatrix::from_diag(&[1.0, 0.0])
        );

        let h = std::f64::consts::FRAC_1_SQRT_2;
        let bell = PureState::new(
            QubitRegister::qubits(&[1, 2]).unwrap(),
            vec![
                Complex64::new(h, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(h, 0.0),
            ],
        )
        .unwrap();
        let rho = density(&bell);
        for (i, j) in [(0, 0), (0, 3), (3, 0), (3, 3)] {
            assert!((rho.matrix()[(i, j)].re - 0.5).abs() < 1e-15);
        }
        let sq = rho.matrix().matmul(rho.matrix());
        assert!(sq.max_abs_diff(rho.matrix()) < 1e-12);
        rho.validate().unwrap();
    }

    #[test]
    fn density_validation() {
        let reg = QubitRegister::qubits(&[1]).unwrap();
        assert!(matches!(
            DensityMatrix::new(ComplexMatrix::from_diag(&[0.7, 0.7]), reg.clone()),
            Err(Error::BadTrace(_))
        ));
        assert!(matches!(
            DensityMatrix::new(ComplexMatrix::from_diag(&[1.2, -0.2]), reg.clone()),
            Err(Error::NotPositive(_))
        ));
        assert!(matches!(
            DensityMatrix::new(ComplexMatrix::identity(4), reg),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
