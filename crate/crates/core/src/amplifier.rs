//! Logistic-map amplification of the success probability.
//!
//! The orbit `x_{m+1} = a x_m (1 - x_m)` is started at `x_0 = q²`. Zero is a
//! fixed point, so an unsatisfiable instance stays at 0 forever, while any
//! positive `q²` grows roughly like `a^m q²` until it crosses 1/2.

use std::io;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

/// Logistic parameter used throughout.
pub const DEFAULT_A: f64 = 3.71;
pub const THRESHOLD: f64 = 0.5;
/// Grid sweeps for [`empirical_t_c`] are limited to this many variables.
pub const MAX_GRID_VARS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum AmplifierError {
    #[error("x = {0} is outside [0, 1]")]
    StateOutOfRange(f64),
    #[error("a = {0} is outside [0, 4]")]
    ParameterOutOfRange(f64),
    #[error("r = {r} is outside 1..=2^{n}")]
    CountOutOfRange { n: usize, r: u64 },
    #[error("n must be at least 1")]
    NoVariables,
    #[error("{n} variables exceeds the grid sweep limit of {limit}")]
    TooManyVariables { n: usize, limit: usize },
}

fn check_unit(x: f64) -> Result<(), AmplifierError> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(AmplifierError::StateOutOfRange(x))
    }
}

fn check_param(a: f64) -> Result<(), AmplifierError> {
    if (0.0..=4.0).contains(&a) {
        Ok(())
    } else {
        Err(AmplifierError::ParameterOutOfRange(a))
    }
}

/// One application of `f_a(x) = a x (1 - x)`.
pub fn logistic_step(x: f64, a: f64) -> Result<f64, AmplifierError> {
    check_unit(x)?;
    check_param(a)?;
    Ok(logistic(x, a))
}

#[inline]
fn logistic(x: f64, a: f64) -> f64 {
    a * x * (1.0 - x)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LogisticParams {
    pub a: f64,
    pub max_steps: usize,
}

impl LogisticParams {
    pub fn new(a: f64, max_steps: usize) -> Result<Self, AmplifierError> {
        check_param(a)?;
        Ok(LogisticParams { a, max_steps })
    }

    /// `a = 3.71` with the default step budget for `n` variables.
    pub fn for_vars(n: usize) -> Self {
        LogisticParams {
            a: DEFAULT_A,
            max_steps: default_max_steps(n),
        }
    }
}

/// `max(2n, t_c(n))`: covers both the `0..=2n` crossing window and the
/// amplifier budget.
pub fn default_max_steps(n: usize) -> usize {
    (2 * n).max(t_c(n.max(1)))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AmplificationTrace {
    pub a: f64,
    pub x0: f64,
    /// `x_0, x_1, …`; stops at the first crossing or after `max_steps`.
    pub orbit: Vec<f64>,
    /// First `m` with `x_m > 1/2`.
    pub m_star: Option<usize>,
}

impl AmplificationTrace {
    pub fn len(&self) -> usize {
        self.orbit.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbit.is_empty()
    }

    pub fn final_value(&self) -> f64 {
        *self.orbit.last().expect("orbit holds at least x_0")
    }

    /// `step,x` rows, 17 significant digits, then a `# m_star=` comment.
    pub fn write_csv<W: io::Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "step,x")?;
        for (m, x) in self.orbit.iter().enumerate() {
            writeln!(out, "{m},{}", format_sig17(*x))?;
        }
        match self.m_star {
            Some(m) => writeln!(out, "# m_star={m}"),
            None => writeln!(out, "# m_star=none"),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("CSV is ASCII")
    }
}

/// Scientific notation with 17 significant digits; locale independent.
pub fn format_sig17(x: f64) -> String {
    format!("{x:.16e}")
}

/// Iterates from `x_0 = q²` until `x_m > 1/2` or `max_steps` steps are done.
pub fn amplify(q_squared: f64, params: &LogisticParams) -> Result<AmplificationTrace, AmplifierError> {
    check_unit(q_squared)?;
    check_param(params.a)?;
    let mut orbit = Vec::with_capacity(params.max_steps + 1);
    let mut x = q_squared;
    let mut m_star = None;
    for m in 0..=params.max_steps {
        orbit.push(x);
        if x > THRESHOLD {
            m_star = Some(m);
            break;
        }
        x = logistic(x, params.a);
    }
    Ok(AmplificationTrace {
        a: params.a,
        x0: q_squared,
        orbit,
        m_star,
    })
}

/// First crossing step from `x0`, iterating without a step cap. Only valid
/// for `x0 > 0` with `a > 2`, where the orbit grows monotonically below 1/2.
fn first_crossing(x0: f64, a: f64) -> usize {
    let mut x = x0;
    let mut m = 0;
    while x <= THRESHOLD {
        x = logistic(x, a);
        m += 1;
    }
    m
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StepBounds {
    pub lower: usize,
    pub upper: usize,
}

/// Window for the first crossing when `q² = r / 2^n`:
/// `lower = ⌊(n - 1 - log₂ r) / log₂ 3.71⌋` (clamped at 0) and
/// `upper = ⌊5(n - 1)/4⌋`.
pub fn step_bounds(n: usize, r: u64) -> Result<StepBounds, AmplifierError> {
    if n == 0 {
        return Err(AmplifierError::NoVariables);
    }
    if r == 0 || (n < 64 && r > 1u64 << n) {
        return Err(AmplifierError::CountOutOfRange { n, r });
    }
    let numerator = (n - 1) as f64 - (r as f64).log2();
    let lower = (numerator / DEFAULT_A.log2()).floor().max(0.0) as usize;
    Ok(StepBounds {
        lower,
        upper: t_c(n),
    })
}

/// Closed-form amplifier budget `⌊5(n - 1)/4⌋`.
pub fn t_c(n: usize) -> usize {
    assert!(n >= 1, "t_c needs n >= 1");
    5 * (n - 1) / 4
}

/// Largest first-crossing step over the grid `q² ∈ {1, …, 2^{n-1}} / 2^n`,
/// evaluated by direct iteration at `a = 3.71`.
pub fn empirical_t_c(n: usize) -> Result<usize, AmplifierError> {
    if n == 0 {
        return Err(AmplifierError::NoVariables);
    }
    if n > MAX_GRID_VARS {
        return Err(AmplifierError::TooManyVariables {
            n,
            limit: MAX_GRID_VARS,
        });
    }
    let scale = (1u64 << n) as f64;
    Ok((1..=1u64 << (n - 1))
        .into_par_iter()
        .map(|r| first_crossing(r as f64 / scale, DEFAULT_A))
        .max()
        .unwrap_or(0))
}

/// Per-`r` first crossings for `q² = r / 2^n`, `r = 1..=2^{n-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    pub r: u64,
    pub q_squared: f64,
    pub m_star: Option<usize>,
    /// Orbit value at the crossing (or the last computed value).
    pub x_final: f64,
}

pub fn crossing_sweep(n: usize, params: &LogisticParams) -> Result<Vec<SweepRow>, AmplifierError> {
    if n == 0 {
        return Err(AmplifierError::NoVariables);
    }
    if n > MAX_GRID_VARS {
        return Err(AmplifierError::TooManyVariables {
            n,
            limit: MAX_GRID_VARS,
        });
    }
    let scale = (1u64 << n) as f64;
    (1..=1u64 << (n - 1))
        .into_par_iter()
        .map(|r| {
            let q = r as f64 / scale;
            let trace = amplify(q, params)?;
            Ok(SweepRow {
                r,
                q_squared: q,
                m_star: trace.m_star,
                x_final: trace.final_value(),
            })
        })
        .collect()
}

/// Diagonal density matrix `(I + x σ₃)/2` of the amplifier output.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AmplifierState {
    /// `⟨0|ρ|0⟩ = (1 + x)/2`
    pub p_up: f64,
    /// `⟨1|ρ|1⟩ = (1 - x)/2`
    pub p_down: f64,
    /// `M = x`
    pub expectation: f64,
}

impl AmplifierState {
    pub fn trace(&self) -> f64 {
        self.p_up + self.p_down
    }

    /// `tr(ρ σ₃)` with `σ₃ = diag(1, -1)`.
    pub fn sigma_z(&self) -> f64 {
        self.p_up - self.p_down
    }
}

pub fn density_view(x: f64) -> Result<AmplifierState, AmplifierError> {
    check_unit(x)?;
    let p_up = (1.0 + x) / 2.0;
    // p_up is in [1/2, 1], so 1 - p_up is exact and the trace is exactly 1.
    let p_down = 1.0 - p_up;
    Ok(AmplifierState {
        p_up,
        p_down,
        expectation: x,
    })
}
