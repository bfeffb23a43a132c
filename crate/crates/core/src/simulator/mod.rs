//! Circuit execution.
//!
//! Two engines: a dense state vector over `2^N` amplitudes, and a classical
//! bit-parallel truth table that exploits the fact that every gate after the
//! Hadamard prefix permutes basis states.

mod dense;
mod table;

use thiserror::Error;

use crate::circuit::CircuitError;

pub use dense::{
    apply_gate, basis_state, run, success_probability, MeasurementSummary, SimConfig, StateVector,
    DEFAULT_MAX_QUBITS, HARD_MAX_QUBITS, ZERO_TOLERANCE,
};
pub use table::{propagate_block, truth_table_run, TruthTableResult, MAX_TABLE_VARS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimError {
    #[error("{width} qubits exceeds the dense limit of {limit}")]
    WidthOverLimit { width: usize, limit: usize },
    #[error("dense limit {requested} exceeds the hard cap of {cap}")]
    LimitTooLarge { requested: usize, cap: usize },
    #[error("basis bits have length {got}, register has {width} qubits")]
    BitsLength { width: usize, got: usize },
    #[error("circuit width {circuit} does not match state width {state}")]
    WidthMismatch { circuit: usize, state: usize },
    #[error("{n} variables exceeds the truth-table limit of {limit}")]
    TooManyVariables { n: usize, limit: usize },
    #[error(transparent)]
    Gate(#[from] CircuitError),
}
