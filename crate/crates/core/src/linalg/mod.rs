//! Dense complex linear algebra for small multi-qubit systems.

mod eigen;
mod matrix;
mod register;

pub use eigen::{hermitian_eig, sqrt_psd, HermitianEigen, HERMITIAN_TOL, PSD_CLAMP};
pub use matrix::{det_small, kron, kron_vec, pauli, ComplexMatrix};
pub use register::{partial_trace, partial_transpose, Label, QubitRegister};
