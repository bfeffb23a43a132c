//! Gate-count and amplifier-step complexity figures.
//!
//! `T_Q` is the number of elementary gates in the compiled circuit, `T_C` the
//! amplifier step budget, and their product is the total cost of one
//! decision.

use serde::Serialize;
use thiserror::Error;

use crate::amplifier::{empirical_t_c, t_c, MAX_GRID_VARS};
use crate::circuit::GateCensus;
use crate::cnf::ClauseSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexityError {
    #[error("census total {measured} differs from closed form {closed_form}")]
    CensusMismatch { measured: u64, closed_form: u64 },
    #[error("gate count {measured} exceeds bound {bound}")]
    BoundExceeded { measured: u64, bound: u64 },
}

/// Gate count from the clause structure alone, matching the census exactly.
///
/// Per clause of size `c ≥ 2`: `3(c - 1)` for the OR chain plus two `X` per
/// negated literal. A unit clause costs one copy `CX`, plus one `X` on the
/// copy if negated. Then `m - 1` conjunctions (or one final copy when
/// `m = 1`) and `n` Hadamards.
pub fn t_q_closed_form(cs: &ClauseSet) -> u64 {
    let per_clause: u64 = cs
        .clauses()
        .iter()
        .map(|c| {
            let size = c.len() as u64;
            let negated = c.negated_count() as u64;
            if size == 1 {
                1 + negated
            } else {
                3 * (size - 1) + 2 * negated
            }
        })
        .sum();
    let m = cs.num_clauses() as u64;
    let conjunctions = if m == 1 { 1 } else { m - 1 };
    per_clause + conjunctions + cs.num_vars() as u64
}

/// The sum `3Σ(c_k - 1) + 2Σ|C_k ∩ X̄| + m - 1 + n` taken term by term,
/// without the unit-clause and single-clause copy gates.
pub fn t_q_literal(cs: &ClauseSet) -> u64 {
    let or_gates: u64 = cs.clauses().iter().map(|c| 3 * (c.len() as u64 - 1)).sum();
    let negations: u64 = cs.clauses().iter().map(|c| 2 * c.negated_count() as u64).sum();
    or_gates + negations + cs.num_clauses() as u64 - 1 + cs.num_vars() as u64
}

/// `8mn - 2m + n - 1`.
pub fn t_q_bound(n: u64, m: u64) -> u64 {
    assert!(n >= 1 && m >= 1, "bound defined for n, m >= 1");
    8 * m * n - 2 * m + n - 1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexityReport {
    pub n: u64,
    pub m: u64,
    pub census: GateCensus,
    pub t_q_measured: u64,
    pub t_q_closed_form: u64,
    /// Term-by-term sum without copy gates; differs from the census when
    /// unit clauses are present or `m = 1`.
    pub t_q_literal: u64,
    pub t_q_bound: u64,
    pub t_c: u64,
    /// Largest first-crossing step over the `q²` grid; `None` above
    /// [`MAX_GRID_VARS`] variables. Not equal to `t_c` in general.
    pub t_c_grid_max: Option<u64>,
    /// `t_q_measured · t_c`
    pub total: u64,
    /// `t_q_bound · t_c`
    pub total_bound: u64,
}

/// Assembles the report and checks census against closed form and bound.
pub fn report(cs: &ClauseSet, census: &GateCensus) -> Result<ComplexityReport, ComplexityError> {
    let n = cs.num_vars() as u64;
    let m = cs.num_clauses() as u64;
    let measured = census.total() as u64;
    let closed_form = t_q_closed_form(cs);
    if measured != closed_form {
        return Err(ComplexityError::CensusMismatch {
            measured,
            closed_form,
        });
    }
    let bound = t_q_bound(n, m);
    if measured > bound {
        return Err(ComplexityError::BoundExceeded { measured, bound });
    }
    let t_c = t_c(cs.num_vars()) as u64;
    let t_c_grid_max = if cs.num_vars() <= MAX_GRID_VARS {
        empirical_t_c(cs.num_vars()).ok().map(|m| m as u64)
    } else {
        None
    };
    Ok(ComplexityReport {
        n,
        m,
        census: *census,
        t_q_measured: measured,
        t_q_closed_form: closed_form,
        t_q_literal: t_q_literal(cs),
        t_q_bound: bound,
        t_c,
        t_c_grid_max,
        total: measured * t_c,
        total_bound: bound * t_c,
    })
}
