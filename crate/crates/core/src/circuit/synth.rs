use crate::cnf::{ClauseSet, Literal};

use super::{compute_layout, Circuit, CircuitError, Gate, Qubit, RegisterLayout};

/// OR of lines `u` and `v` into the clean line `w`, in elementary gates.
///
/// `CX(u,w) · CX(v,w) · CCX(u,v,w)` applied right to left: the Toffoli goes
/// first. On a `|0⟩` target the three gates commute, so the order only fixes
/// the emitted sequence. A negated input is wrapped in `X` on both sides.
pub fn expand_or(
    u: Qubit,
    v: Qubit,
    w: Qubit,
    neg_u: bool,
    neg_v: bool,
) -> Result<Vec<Gate>, CircuitError> {
    // only distinctness and nonzero indices can be checked without a width
    Gate::CCNot(u, v, w).validate(usize::MAX)?;

    let mut gates = Vec::with_capacity(7);
    if neg_u {
        gates.push(Gate::Not(u));
    }
    if neg_v {
        gates.push(Gate::Not(v));
    }
    gates.extend([Gate::CCNot(u, v, w), Gate::CNot(v, w), Gate::CNot(u, w)]);
    if neg_v {
        gates.push(Gate::Not(v));
    }
    if neg_u {
        gates.push(Gate::Not(u));
    }
    Ok(gates)
}

/// Gates computing the truth value of clause `k` (1-based) onto
/// `layout.clause_out[k-1]`.
pub fn expand_clause(cs: &ClauseSet, layout: &RegisterLayout, k: usize) -> Vec<Gate> {
    assert!(k >= 1 && k <= cs.num_clauses(), "clause index {k} out of range");
    let literals = cs.clauses()[k - 1].literals();
    let start = layout.s[k - 1];

    if let [lit] = literals {
        // copy, then invert the copy for a negated literal
        let mut gates = vec![Gate::CNot(lit.var(), start)];
        if lit.is_negated() {
            gates.push(Gate::Not(start));
        }
        return gates;
    }

    let or = |a: Literal, b: Qubit, neg_b: bool, w: Qubit| {
        expand_or(a.var(), b, w, a.is_negated(), neg_b)
            .expect("layout lines are distinct from variable lines")
    };
    let mut gates = or(literals[0], literals[1].var(), literals[1].is_negated(), start);
    for (i, &lit) in literals.iter().enumerate().skip(2) {
        // i is the 0-based literal index; the partial OR lives on start + i - 2
        gates.extend(or(lit, start + i - 2, false, start + i - 1));
    }
    gates
}

/// Conjunction of all clause outputs onto the result line `N`.
///
/// For a single clause this degenerates to one copy of its output.
pub fn expand_and_chain(layout: &RegisterLayout) -> Vec<Gate> {
    if layout.m == 1 {
        return vec![Gate::CNot(layout.clause_out[0], layout.result_qubit())];
    }
    let mut acc = layout.clause_out[0];
    (1..layout.m)
        .map(|k| {
            let target = layout.and_target(k);
            let gate = Gate::CCNot(acc, layout.clause_out[k], target);
            acc = target;
            gate
        })
        .collect()
}

/// Compiles the clause set into `H^{⊗n}`, then every clause OR chain in
/// order, then the AND chain.
pub fn synthesize(cs: &ClauseSet) -> Circuit {
    let layout = compute_layout(cs);
    let mut gates: Vec<Gate> = (1..=cs.num_vars()).map(Gate::Hadamard).collect();
    for k in 1..=cs.num_clauses() {
        gates.extend(expand_clause(cs, &layout, k));
    }
    gates.extend(expand_and_chain(&layout));
    Circuit::new(layout, gates).expect("synthesized gates respect the layout")
}
