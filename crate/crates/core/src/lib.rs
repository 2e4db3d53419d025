//! Local Buzek-Hillery cloning of W-type states.
//!
//! The first two qubits of α|001⟩ + β|010⟩ + γ|100⟩ are cloned with the universal
//! symmetric cloner; the crate builds the resulting two-qubit outputs ρ₁₅, ρ₁₄, ρ₂₅
//! and ρ₄₂ and measures their separability (W3/W4 determinants and the PPT spectrum),
//! entanglement (concurrence, entanglement of formation) and mixedness (linear entropy).

pub mod analysis;
pub mod cloner;
pub mod closed_form;
pub mod error;
pub mod linalg;
pub mod measures;
pub mod report;
pub mod separability;
pub mod states;
pub mod svg;

pub use analysis::{analyze, sweep, AnalysisRecord, OutputAnalysis, SweepGrid};
pub use cloner::{bh_clone, broadcast_pipeline, BroadcastOutputs, ClonerIsometry, OutputPair};
pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, Label, QubitRegister};
pub use measures::{concurrence, eof, linear_entropy, MeasureRecord};
pub use report::{table2, thresholds, Table2Report, ThresholdReport, Verdict};
pub use separability::{find_threshold, ppt_verdict, w3_w4, SeparabilityVerdict};
pub use states::{density, symmetric_params, w_type_state, DensityMatrix, PureState, WParams};
