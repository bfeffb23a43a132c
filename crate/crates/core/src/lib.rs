//! Decide satisfiability of a CNF clause set with a gate-level quantum
//! circuit and a logistic-map amplifier, and count what it costs.
//!
//! The pipeline:
//!
//! 1. [`cnf`] parses DIMACS and provides an exhaustive classical oracle.
//! 2. [`circuit`] lays out the register (variable lines, dust lines, one
//!    result line) and compiles the clause set into NOT / CNOT / Toffoli /
//!    Hadamard gates.
//! 3. [`simulator`] runs the circuit on a dense state vector, or propagates
//!    all assignments bit-parallel through its classical part, and reads the
//!    probability `q²` that the result line is 1.
//! 4. [`amplifier`] iterates `x ↦ a x (1 - x)` from `q²` until it exceeds
//!    1/2; zero stays zero, so a crossing means satisfiable.
//! 5. [`complexity`] reports the gate count, the step budget and their
//!    product against closed-form bounds.
//!
//! [`report::solve`] ties the stages together.
//!
//! ```
//! use omv_sat::cnf::parse_dimacs;
//! use omv_sat::report::{solve, SolveOptions};
//!
//! let cs = parse_dimacs("p cnf 2 2\n1 2 0\n-1 0\n").unwrap();
//! let outcome = solve(&cs, &SolveOptions::default()).unwrap();
//! assert!(outcome.report.sat);
//! assert_eq!(outcome.report.satisfying_count, 1);
//! ```
//!
//! Runnable walkthroughs live in `examples/`; `cargo run --example <name>`.

pub mod amplifier;
pub mod circuit;
pub mod cnf;
pub mod complexity;
pub mod report;
pub mod simulator;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Cnf(#[from] cnf::CnfError),
    #[error(transparent)]
    Circuit(#[from] circuit::CircuitError),
    #[error(transparent)]
    Sim(#[from] simulator::SimError),
    #[error(transparent)]
    Amplifier(#[from] amplifier::AmplifierError),
    #[error(transparent)]
    Complexity(#[from] complexity::ComplexityError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
