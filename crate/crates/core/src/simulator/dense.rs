use std::f64::consts::FRAC_1_SQRT_2;
use std::io;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::circuit::{Circuit, Gate, RegisterLayout};

use super::SimError;

pub const DEFAULT_MAX_QUBITS: usize = 26;
/// Beyond this no override is accepted.
pub const HARD_MAX_QUBITS: usize = 30;
/// Probabilities at or below this are treated as zero.
pub const ZERO_TOLERANCE: f64 = 1e-12;

// Below this width the kernels run sequentially.
const PARALLEL_MIN_WIDTH: usize = 16;
const MIN_PAIRS_PER_TASK: usize = 1 << 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SimConfig {
    max_qubits: usize,
}

impl Default for SimConfig {
    fn default() -> Self {
        SimConfig {
            max_qubits: DEFAULT_MAX_QUBITS,
        }
    }
}

impl SimConfig {
    pub fn with_max_qubits(max_qubits: usize) -> Result<Self, SimError> {
        if max_qubits > HARD_MAX_QUBITS {
            return Err(SimError::LimitTooLarge {
                requested: max_qubits,
                cap: HARD_MAX_QUBITS,
            });
        }
        Ok(SimConfig { max_qubits })
    }

    pub fn max_qubits(&self) -> usize {
        self.max_qubits
    }

    pub fn check_width(&self, width: usize) -> Result<(), SimError> {
        if width > self.max_qubits {
            return Err(SimError::WidthOverLimit {
                width,
                limit: self.max_qubits,
            });
        }
        Ok(())
    }
}

/// Dense `N`-qubit state. Index bit `j - 1` encodes qubit `j`, so qubit 1 is
/// the least significant bit and qubit `N` the most significant.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    width: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// `|0^N⟩` under the default width limit.
    pub fn zero(width: usize) -> Result<Self, SimError> {
        basis_state(width, &vec![false; width], &SimConfig::default())
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amps[index]
    }

    pub fn norm_sqr(&self) -> f64 {
        chunked_sum(&self.amps)
    }

    /// Probability that measuring `qubit` (1-based) gives 1.
    pub fn probability_of_one(&self, qubit: usize) -> f64 {
        let mask = 1usize << (qubit - 1);
        self.amps
            .iter()
            .enumerate()
            .filter(|(i, _)| i & mask != 0)
            .map(|(_, a)| a.norm_sqr())
            .sum()
    }

    /// Largest `|a - b|` over all amplitudes.
    pub fn max_distance(&self, other: &StateVector) -> f64 {
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn apply(&mut self, gate: &Gate) -> Result<(), SimError> {
        apply_gate(self, gate)
    }

    /// Debug dump, `index,re,im` per amplitude.
    pub fn write_csv<W: io::Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "index,re,im")?;
        for (i, a) in self.amps.iter().enumerate() {
            writeln!(out, "{i},{:.16e},{:.16e}", a.re, a.im)?;
        }
        Ok(())
    }
}

// Deterministic regardless of thread count: fixed chunking, sequential fold
// of the partial sums.
fn chunked_sum(amps: &[Complex64]) -> f64 {
    let partials: Vec<f64> = amps
        .par_chunks(1 << 16)
        .map(|c| c.iter().map(Complex64::norm_sqr).sum::<f64>())
        .collect();
    partials.iter().sum()
}

/// Computational basis state; `bits[j - 1]` is the value of qubit `j`.
pub fn basis_state(width: usize, bits: &[bool], config: &SimConfig) -> Result<StateVector, SimError> {
    config.check_width(width)?;
    if bits.len() != width {
        return Err(SimError::BitsLength {
            width,
            got: bits.len(),
        });
    }
    let index = bits
        .iter()
        .enumerate()
        .fold(0usize, |acc, (j, &b)| acc | (usize::from(b) << j));
    let mut amps = vec![Complex64::new(0.0, 0.0); 1 << width];
    amps[index] = Complex64::new(1.0, 0.0);
    Ok(StateVector { width, amps })
}

/// Applies one gate in place by pairing indices that differ only in the
/// target bit. No matrices are formed.
pub fn apply_gate(state: &mut StateVector, gate: &Gate) -> Result<(), SimError> {
    gate.validate(state.width)?;
    let (control_mask, target) = match *gate {
        Gate::Not(t) | Gate::Hadamard(t) => (0, t),
        Gate::CNot(c, t) => (1 << (c - 1), t),
        Gate::CCNot(a, b, t) => ((1 << (a - 1)) | (1 << (b - 1)), t),
    };
    let bit = target - 1;
    let parallel = state.width >= PARALLEL_MIN_WIDTH;
    match gate {
        Gate::Hadamard(_) => for_each_pair(&mut state.amps, bit, parallel, |_, lo, hi| {
            let (a0, a1) = (*lo, *hi);
            *lo = (a0 + a1) * FRAC_1_SQRT_2;
            *hi = (a0 - a1) * FRAC_1_SQRT_2;
        }),
        _ => for_each_pair(&mut state.amps, bit, parallel, |index, lo, hi| {
            if index & control_mask == control_mask {
                std::mem::swap(lo, hi);
            }
        }),
    }
    Ok(())
}

/// Calls `f(index_of_lo, lo, hi)` for every pair `(i, i | 1 << bit)` with
/// bit `bit` of `i` clear. Each pair is visited exactly once, so any schedule
/// gives the same result.
fn for_each_pair<F>(amps: &mut [Complex64], bit: usize, parallel: bool, f: F)
where
    F: Fn(usize, &mut Complex64, &mut Complex64) + Sync,
{
    let half = 1usize << bit;
    let block = half << 1;
    let visit = |(ci, chunk): (usize, &mut [Complex64])| {
        let base = ci * block;
        let (lo, hi) = chunk.split_at_mut(half);
        for (j, (l, h)) in lo.iter_mut().zip(hi.iter_mut()).enumerate() {
            f(base + j, l, h);
        }
    };
    if !parallel {
        amps.chunks_mut(block).enumerate().for_each(visit);
    } else if half >= MIN_PAIRS_PER_TASK {
        // few large blocks: split inside each block
        for (ci, chunk) in amps.chunks_mut(block).enumerate() {
            let base = ci * block;
            let (lo, hi) = chunk.split_at_mut(half);
            lo.par_iter_mut()
                .zip(hi.par_iter_mut())
                .enumerate()
                .with_min_len(MIN_PAIRS_PER_TASK)
                .for_each(|(j, (l, h))| f(base + j, l, h));
        }
    } else {
        amps.par_chunks_mut(block)
            .enumerate()
            .with_min_len(MIN_PAIRS_PER_TASK / half)
            .for_each(visit);
    }
}

/// Applies the circuit's gates in order.
pub fn run(circuit: &Circuit, mut state: StateVector) -> Result<StateVector, SimError> {
    if circuit.width() != state.width {
        return Err(SimError::WidthMismatch {
            circuit: circuit.width(),
            state: state.width,
        });
    }
    for gate in circuit.gates() {
        apply_gate(&mut state, gate)?;
    }
    Ok(state)
}

/// Distribution of the result line after the circuit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeasurementSummary {
    pub q_squared: f64,
    /// `(P(0), P(1))` for the result line.
    pub distribution: (f64, f64),
}

impl MeasurementSummary {
    pub fn is_sat(&self) -> bool {
        self.q_squared > ZERO_TOLERANCE
    }
}

/// Projects onto `|1⟩` of the result line `N`.
///
/// Line `N` is the most significant index bit, so the two outcomes are the
/// two halves of the amplitude vector.
pub fn success_probability(state: &StateVector, layout: &RegisterLayout) -> MeasurementSummary {
    assert_eq!(state.width, layout.width, "state does not match layout");
    let (zero, one) = state.amps.split_at(state.amps.len() / 2);
    let p1 = chunked_sum(one);
    let p0 = chunked_sum(zero);
    MeasurementSummary {
        q_squared: p1,
        distribution: (p0, p1),
    }
}
