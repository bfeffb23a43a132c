//! Gate-list text format.
//!
//! ```text
//! qubits 14
//! # n=4 m=4
//! # s_k=5,7,10,12
//! # s_f=14 mu=9
//! # clause_out=6,8,10,13
//! H 1
//! CCX 1 4 5
//! X 2
//! ```

use std::fmt::Write;

use super::{Circuit, CircuitError, Gate};

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub(super) fn write_circuit(circuit: &Circuit) -> String {
    let layout = circuit.layout();
    let mut out = String::new();
    // write! into a String cannot fail
    let _ = writeln!(out, "qubits {}", layout.width);
    let _ = writeln!(out, "# n={} m={}", layout.n, layout.m);
    let _ = writeln!(out, "# s_k={}", join(&layout.s));
    let _ = writeln!(out, "# s_f={} mu={}", layout.s_f, layout.mu);
    let _ = writeln!(out, "# clause_out={}", join(&layout.clause_out));
    for gate in circuit.gates() {
        let _ = writeln!(out, "{gate}");
    }
    out
}

/// Reads the gate-list format back as `(width, gates)`. Comment lines are
/// skipped; every gate is range-checked against the declared width.
pub fn parse_gate_list(text: &str) -> Result<(usize, Vec<Gate>), CircuitError> {
    let mut width = None;
    let mut gates = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |reason: String| CircuitError::Parse {
            line: line_no,
            reason,
        };
        let mut fields = line.split_whitespace();
        let op = fields.next().unwrap_or_default();
        let args = fields
            .map(|f| {
                f.parse::<usize>()
                    .map_err(|_| err(format!("bad qubit index `{f}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;

        if op == "qubits" {
            if width.is_some() {
                return Err(err("duplicate `qubits` header".into()));
            }
            match args.as_slice() {
                [w] => width = Some(*w),
                _ => return Err(err("expected `qubits <N>`".into())),
            }
            continue;
        }

        let w = width.ok_or_else(|| err("gate before `qubits` header".into()))?;
        let gate = match (op, args.as_slice()) {
            ("H", [t]) => Gate::Hadamard(*t),
            ("X", [t]) => Gate::Not(*t),
            ("CX", [c, t]) => Gate::CNot(*c, *t),
            ("CCX", [a, b, t]) => Gate::CCNot(*a, *b, *t),
            _ => return Err(err(format!("unrecognized gate `{line}`"))),
        };
        gate.validate(w)?;
        gates.push(gate);
    }
    let width = width.ok_or(CircuitError::Parse {
        line: 0,
        reason: "missing `qubits` header".into(),
    })?;
    Ok((width, gates))
}
