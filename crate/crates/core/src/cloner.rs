//! Buzek-Hillery universal 1→2 cloner and the broadcast pipeline.
//!
//! The machine states are embedded as |↑⟩ = |0⟩, |↓⟩ = |1⟩ on a fresh qubit.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::linalg::{Label, QubitRegister};
use crate::states::{density, w_type_state, DensityMatrix, PureState, WParams};

/// Images of |0⟩ and |1⟩ on (original, clone, machine), indexed `orig<<2 | clone<<1 | machine`.
#[derive(Debug, Clone, PartialEq)]
pub struct ClonerIsometry {
    images: [[Complex64; 8]; 2],
}

impl Default for ClonerIsometry {
    fn default() -> Self {
        Self::buzek_hillery()
    }
}

impl ClonerIsometry {
    /// |0⟩ ↦ √(2/3)|00⟩|↑⟩ + √(1/6)(|01⟩+|10⟩)|↓⟩,
    /// |1⟩ ↦ √(2/3)|11⟩|↓⟩ + √(1/6)(|01⟩+|10⟩)|↑⟩.
    pub fn buzek_hillery() -> Self {
        let big = Complex64::new((2.0f64 / 3.0).sqrt(), 0.0);
        let small = Complex64::new((1.0f64 / 6.0).sqrt(), 0.0);
        let mut zero = [Complex64::new(0.0, 0.0); 8];
        zero[0b000] = big;
        zero[0b011] = small;
        zero[0b101] = small;
        let mut one = [Complex64::new(0.0, 0.0); 8];
        one[0b111] = big;
        one[0b010] = small;
        one[0b100] = small;
        Self {
            images: [zero, one],
        }
    }

    pub fn image(&self, bit: usize) -> &[Complex64; 8] {
        &self.images[bit]
    }

    /// ⟨image(a)|image(b)⟩.
    pub fn overlap(&self, a: usize, b: usize) -> Complex64 {
        self.images[a]
            .iter()
            .zip(&self.images[b])
            .map(|(x, y)| x.conj() * y)
            .sum()
    }

    /// Clones `target`; `clone` and `machine` are inserted directly after it in the register.
    pub fn apply(
        &self,
        psi: &PureState,
        target: Label,
        clone: Label,
        machine: Label,
    ) -> Result<PureState> {
        let reg = psi.register();
        let pos = reg.position(target)?;
        let out_reg = reg.inserted_after(pos, &[clone, machine])?;
        let shift = reg.shift(pos);
        let low_mask = (1usize << shift) - 1;

        let mut out = vec![Complex64::new(0.0, 0.0); out_reg.dim()];
        for (idx, &amp) in psi.amplitudes().iter().enumerate() {
            if amp.norm_sqr() == 0.0 {
                continue;
            }
            let bit = (idx >> shift) & 1;
            let low = idx & low_mask;
            let high = idx >> (shift + 1);
            for (triple, &w) in self.images[bit].iter().enumerate() {
                if w.norm_sqr() == 0.0 {
                    continue;
                }
                out[(high << (shift + 3)) | (triple << shift) | low] += amp * w;
            }
        }
        PureState::new(out_reg, out)
    }
}

/// Applies the Buzek-Hillery cloner to `target`.
pub fn bh_clone(psi: &PureState, target: Label, clone: Label, machine: Label) -> Result<PureState> {
    ClonerIsometry::buzek_hillery().apply(psi, target, clone, machine)
}

/// The four two-qubit outputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OutputPair {
    #[serde(rename = "rho_15")]
    Rho15,
    #[serde(rename = "rho_14")]
    Rho14,
    #[serde(rename = "rho_25")]
    Rho25,
    #[serde(rename = "rho_42")]
    Rho42,
}

impl OutputPair {
    pub const ALL: [OutputPair; 4] = [
        OutputPair::Rho15,
        OutputPair::Rho14,
        OutputPair::Rho25,
        OutputPair::Rho42,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OutputPair::Rho15 => "rho_15",
            OutputPair::Rho14 => "rho_14",
            OutputPair::Rho25 => "rho_25",
            OutputPair::Rho42 => "rho_42",
        }
    }

    pub fn labels(self) -> [Label; 2] {
        let q = Label::Qubit;
        match self {
            OutputPair::Rho15 => [q(1), q(5)],
            OutputPair::Rho14 => [q(1), q(4)],
            OutputPair::Rho25 => [q(2), q(5)],
            OutputPair::Rho42 => [q(4), q(2)],
        }
    }

    /// Pairs spanning both cloning sites.
    pub fn is_nonlocal(self) -> bool {
        matches!(self, OutputPair::Rho15 | OutputPair::Rho42)
    }
}

impl fmt::Display for OutputPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// ρ₁₂₄₅ (labels 1,4,2,5) and its four two-qubit marginals.
#[derive(Debug, Clone, PartialEq)]
pub struct BroadcastOutputs {
    pub rho_1245: DensityMatrix,
    pub rho_15: DensityMatrix,
    pub rho_14: DensityMatrix,
    pub rho_25: DensityMatrix,
    pub rho_42: DensityMatrix,
}

impl BroadcastOutputs {
    pub fn get(&self, pair: OutputPair) -> &DensityMatrix {
        match pair {
            OutputPair::Rho15 => &self.rho_15,
            OutputPair::Rho14 => &self.rho_14,
            OutputPair::Rho25 => &self.rho_25,
            OutputPair::Rho42 => &self.rho_42,
        }
    }
}

/// Seven-qubit state on (1, 4, M1, 2, 5, M2, 3) after cloning particles 1 and 2.
pub fn cloned_state(p: &WParams) -> Result<PureState> {
    let q = Label::Qubit;
    let m = Label::Machine;
    let psi = w_type_state(p)?;
    let psi = bh_clone(&psi, q(1), q(4), m(1))?;
    bh_clone(&psi, q(2), q(5), m(2))
}

/// Labels kept in ρ₁₂₄₅, in storage order.
pub fn pair_register() -> QubitRegister {
    QubitRegister::qubits(&[1, 4, 2, 5]).expect("static labels are distinct")
}

pub fn broadcast_pipeline(p: &WParams) -> Result<BroadcastOutputs> {
    let full = density(&cloned_state(p)?);
    let rho_1245 = full.partial_trace(pair_register().labels())?;
    let pick = |pair: OutputPair| rho_1245.partial_trace(&pair.labels());
    Ok(BroadcastOutputs {
        rho_15: pick(OutputPair::Rho15)?,
        rho_14: pick(OutputPair::Rho14)?,
        rho_25: pick(OutputPair::Rho25)?,
        rho_42: pick(OutputPair::Rho42)?,
        rho_1245,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ComplexMatrix;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn single(a: Complex64, b: Complex64) -> PureState {
        PureState::new(QubitRegister::qubits(&[1]).unwrap(), vec![a, b]).unwrap()
    }

    fn clone_single(psi: &PureState) -> PureState {
        bh_clone(psi, Label::Qubit(1), Label::Qubit(2), Label::Machine(1)).unwrap()
    }

    #[test]
    fn isometry() {
        let bh = ClonerIsometry::buzek_hillery();
        assert!((bh.overlap(0, 0).re - 1.0).abs() <= 1e-15);
        assert!((bh.overlap(1, 1).re - 1.0).abs() <= 1e-15);
        assert!(bh.overlap(0, 1).norm() <= 1e-15);
    }

    #[test]
    fn image_of_zero() {
        let out = clone_single(&single(c(1.0, 0.0), c(0.0, 0.0)));
        let reg = out.register().labels();
        assert_eq!(reg, &[Label::Qubit(1), Label::Qubit(2), Label::Machine(1)]);
        let a = out.amplitudes();
        assert!((a[0b000].re - (2.0f64 / 3.0).sqrt()).abs() < 1e-15);
        assert!((a[0b011].re - (1.0f64 / 6.0).sqrt()).abs() < 1e-15);
        assert!((a[0b101].re - (1.0f64 / 6.0).sqrt()).abs() < 1e-15);
        let rest: f64 = [1, 2, 4, 6, 7].iter().map(|&i| a[i].norm()).sum();
        assert_eq!(rest, 0.0);
    }

    #[test]
    fn original_keeps_five_sixths() {
        let out = density(&clone_single(&single(c(1.0, 0.0), c(0.0, 0.0))));
        let orig = out.partial_trace(&[Label::Qubit(1)]).unwrap();
        let expected = ComplexMatrix::from_diag(&[5.0 / 6.0, 1.0 / 6.0]);
        assert!(orig.matrix().max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn linear_on_superpositions() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let plus = clone_single(&single(c(h, 0.0), c(0.0, h)));
        let zero = clone_single(&single(c(1.0, 0.0), c(0.0, 0.0)));
        let one = clone_single(&single(c(0.0, 0.0), c(1.0, 0.0)));
        for i in 0..8 {
            let expected = zero.amplitudes()[i] * h + one.amplitudes()[i] * c(0.0, h);
            assert!((plus.amplitudes()[i] - expected).norm() < 1e-15);
        }
    }

    #[test]
    fn cloning_inside_a_register() {
        let p = WParams::symmetric(0.3).unwrap();
        let full = cloned_state(&p).unwrap();
        let names: Vec<String> = full
            .register()
            .labels()
            .iter()
            .map(|l| l.to_string())
            .collect();
        assert_eq!(names, ["1", "4", "M1", "2", "5", "M2", "3"]);
        assert!((full.norm_sqr() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn unknown_target() {
        let psi = single(c(1.0, 0.0), c(0.0, 0.0));
        assert!(bh_clone(&psi, Label::Qubit(9), Label::Qubit(2), Label::Machine(1)).is_err());
    }

    #[test]
    fn outputs_are_density_matrices() {
        let out = broadcast_pipeline(&WParams::new(0.5, 0.3, 0.2).unwrap()).unwrap();
        out.rho_1245.validate().unwrap();
        for pair in OutputPair::ALL {
            let rho = out.get(pair);
            rho.validate().unwrap();
            assert_eq!(rho.labels(), &pair.labels());
        }
    }
}
