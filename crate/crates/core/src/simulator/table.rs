use rayon::prelude::*;
use serde::Serialize;

use crate::circuit::{Circuit, Gate};
use crate::cnf::ClauseSet;

use super::SimError;

pub const MAX_TABLE_VARS: usize = 30;

const LANE_BITS: usize = 6;

// Lane l of the word holds assignment `block * 64 + l`; variable j (j < 6)
// is bit j of the lane index.
const LANE_PATTERNS: [u64; LANE_BITS] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

/// Exact outcome of the truth-table engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TruthTableResult {
    /// Number of assignments whose result line ends at 1.
    pub count: u64,
    pub n: usize,
}

impl TruthTableResult {
    /// `count / 2^n`; exact for every `n` the engine accepts.
    pub fn q_squared(&self) -> f64 {
        self.count as f64 / (1u64 << self.n) as f64
    }

    /// `"r/2^n"`.
    pub fn q_squared_exact(&self) -> String {
        format!("{}/2^{}", self.count, self.n)
    }
}

/// Number of 64-lane blocks needed for `n` variables.
fn block_count(n: usize) -> u64 {
    1u64 << n.saturating_sub(LANE_BITS)
}

fn valid_lanes(n: usize) -> u64 {
    if n >= LANE_BITS {
        u64::MAX
    } else {
        (1u64 << (1u32 << n)) - 1
    }
}

/// Propagates 64 assignments at once through the classical part of the
/// circuit. Returns one word per line (index 0 unused); lane `l` of every
/// word belongs to the packed assignment `block * 64 + l`. Hadamards are
/// skipped: on a basis input they only prepare the superposition that the
/// lanes enumerate.
pub fn propagate_block(circuit: &Circuit, block: u64) -> Vec<u64> {
    let n = circuit.num_vars();
    let mut wires = vec![0u64; circuit.width() + 1];
    for (j, wire) in wires.iter_mut().enumerate().skip(1).take(n) {
        let bit = j - 1;
        *wire = if bit < LANE_BITS {
            LANE_PATTERNS[bit]
        } else if block >> (bit - LANE_BITS) & 1 == 1 {
            u64::MAX
        } else {
            0
        };
    }
    for gate in circuit.gates() {
        match *gate {
            Gate::Not(t) => wires[t] = !wires[t],
            Gate::CNot(c, t) => wires[t] ^= wires[c],
            Gate::CCNot(a, b, t) => wires[t] ^= wires[a] & wires[b],
            Gate::Hadamard(_) => {}
        }
    }
    wires
}

/// Counts the assignments for which the result line of `circuit` ends at 1.
pub fn truth_table_run(cs: &ClauseSet, circuit: &Circuit) -> Result<TruthTableResult, SimError> {
    let n = cs.num_vars();
    if n > MAX_TABLE_VARS {
        return Err(SimError::TooManyVariables {
            n,
            limit: MAX_TABLE_VARS,
        });
    }
    if circuit.num_vars() != n {
        return Err(SimError::WidthMismatch {
            circuit: circuit.num_vars(),
            state: n,
        });
    }
    let logic = circuit.logic_only();
    let result = logic.width();
    let lanes = valid_lanes(n);
    let count = (0..block_count(n))
        .into_par_iter()
        .map(|block| u64::from((propagate_block(&logic, block)[result] & lanes).count_ones()))
        .sum();
    Ok(TruthTableResult { count, n })
}
