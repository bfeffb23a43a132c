//! Elementary-gate circuits over `N` numbered qubit lines.
//!
//! Qubit indices are 1-based throughout: lines `1..=n` carry the variables,
//! `n+1..N-1` are dust (work) lines and line `N` receives the truth value of
//! the whole clause set.

mod layout;
mod synth;
mod text;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub use layout::{compute_layout, RegisterLayout};
pub use synth::{expand_and_chain, expand_clause, expand_or, synthesize};
pub use text::parse_gate_list;

/// 1-based qubit line index.
pub type Qubit = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CircuitError {
    #[error("gate {gate} uses qubit {qubit} more than once")]
    IndexClash { gate: Gate, qubit: Qubit },
    #[error("gate {gate} addresses qubit {qubit} outside 1..={width}")]
    QubitOutOfRange { gate: Gate, qubit: Qubit, width: usize },
    #[error("Hadamard on qubit {qubit} is not a variable line (n = {n})")]
    HadamardOnWorkLine { qubit: Qubit, n: usize },
    #[error("gate {gate} writes variable line {qubit} (n = {n})")]
    WritesVariableLine { gate: Gate, qubit: Qubit, n: usize },
    #[error("circuit text line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

/// The four elementary gates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gate {
    Not(Qubit),
    /// `(control, target)`
    CNot(Qubit, Qubit),
    /// `(control1, control2, target)`
    CCNot(Qubit, Qubit, Qubit),
    Hadamard(Qubit),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GateKind {
    Not,
    CNot,
    CCNot,
    Hadamard,
}

impl Gate {
    pub fn kind(&self) -> GateKind {
        match self {
            Gate::Not(_) => GateKind::Not,
            Gate::CNot(..) => GateKind::CNot,
            Gate::CCNot(..) => GateKind::CCNot,
            Gate::Hadamard(_) => GateKind::Hadamard,
        }
    }

    pub fn target(&self) -> Qubit {
        match *self {
            Gate::Not(t) | Gate::Hadamard(t) | Gate::CNot(_, t) | Gate::CCNot(_, _, t) => t,
        }
    }

    /// Every qubit the gate touches, controls first.
    pub fn qubits(&self) -> Vec<Qubit> {
        match *self {
            Gate::Not(t) | Gate::Hadamard(t) => vec![t],
            Gate::CNot(c, t) => vec![c, t],
            Gate::CCNot(c1, c2, t) => vec![c1, c2, t],
        }
    }

    /// Checks distinctness and that every index lies in `1..=width`.
    pub fn validate(&self, width: usize) -> Result<(), CircuitError> {
        let qubits = self.qubits();
        for (i, &q) in qubits.iter().enumerate() {
            if q == 0 || q > width {
                return Err(CircuitError::QubitOutOfRange {
                    gate: *self,
                    qubit: q,
                    width,
                });
            }
            if qubits[..i].contains(&q) {
                return Err(CircuitError::IndexClash {
                    gate: *self,
                    qubit: q,
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Gate::Hadamard(t) => write!(f, "H {t}"),
            Gate::Not(t) => write!(f, "X {t}"),
            Gate::CNot(c, t) => write!(f, "CX {c} {t}"),
            Gate::CCNot(c1, c2, t) => write!(f, "CCX {c1} {c2} {t}"),
        }
    }
}

/// Exact per-kind gate counts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct GateCensus {
    pub hadamard: usize,
    pub not: usize,
    pub cnot: usize,
    pub ccnot: usize,
}

impl GateCensus {
    pub fn of<'a>(gates: impl IntoIterator<Item = &'a Gate>) -> Self {
        let mut census = GateCensus::default();
        for gate in gates {
            match gate.kind() {
                GateKind::Hadamard => census.hadamard += 1,
                GateKind::Not => census.not += 1,
                GateKind::CNot => census.cnot += 1,
                GateKind::CCNot => census.ccnot += 1,
            }
        }
        census
    }

    pub fn total(&self) -> usize {
        self.hadamard + self.not + self.cnot + self.ccnot
    }
}

/// A gate sequence together with the register layout it was compiled for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    layout: RegisterLayout,
    gates: Vec<Gate>,
}

impl Circuit {
    /// Validates every gate against the layout: indices in range and
    /// distinct, Hadamards only on variable lines, no CNot/CCNot writing a
    /// variable line.
    pub fn new(layout: RegisterLayout, gates: Vec<Gate>) -> Result<Self, CircuitError> {
        let n = layout.n;
        for gate in &gates {
            gate.validate(layout.width)?;
            match *gate {
                Gate::Hadamard(t) if t > n => {
                    return Err(CircuitError::HadamardOnWorkLine { qubit: t, n })
                }
                Gate::CNot(_, t) | Gate::CCNot(_, _, t) if t <= n => {
                    return Err(CircuitError::WritesVariableLine {
                        gate: *gate,
                        qubit: t,
                        n,
                    })
                }
                _ => {}
            }
        }
        Ok(Circuit { layout, gates })
    }

    pub fn width(&self) -> usize {
        self.layout.width
    }

    pub fn num_vars(&self) -> usize {
        self.layout.n
    }

    pub fn layout(&self) -> &RegisterLayout {
        &self.layout
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// The circuit without its Hadamard prefix: a reversible classical map.
    pub fn logic_only(&self) -> Circuit {
        Circuit {
            layout: self.layout.clone(),
            gates: self
                .gates
                .iter()
                .filter(|g| g.kind() != GateKind::Hadamard)
                .copied()
                .collect(),
        }
    }

    /// The inverse circuit. Every elementary gate is self-inverse, so this is
    /// just the reversed sequence.
    pub fn reversed(&self) -> Circuit {
        Circuit {
            layout: self.layout.clone(),
            gates: self.gates.iter().rev().copied().collect(),
        }
    }

    pub fn census(&self) -> GateCensus {
        GateCensus::of(&self.gates)
    }

    /// Line-oriented text form: `qubits N`, layout comments, one gate per line.
    pub fn to_text(&self) -> String {
        text::write_circuit(self)
    }
}

pub fn gate_census(circuit: &Circuit) -> GateCensus {
    circuit.census()
}
