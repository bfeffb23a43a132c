//! End-to-end pipeline: compile, simulate, amplify, account.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::amplifier::{self, amplify, step_bounds, AmplificationTrace, LogisticParams, StepBounds};
use crate::circuit::{synthesize, Circuit, RegisterLayout};
use crate::complexity::{self, ComplexityReport};
use crate::cnf::ClauseSet;
use crate::simulator::{
    run, success_probability, truth_table_run, SimConfig, StateVector, MAX_TABLE_VARS,
};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    /// Full state vector.
    Dense,
    /// Bit-parallel classical propagation.
    Table,
}

impl Engine {
    /// Dense when the register fits under the cap, table otherwise.
    pub fn auto(width: usize, config: &SimConfig) -> Self {
        if width > config.max_qubits() {
            Engine::Table
        } else {
            Engine::Dense
        }
    }
}

impl FromStr for Engine {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dense" => Ok(Engine::Dense),
            "table" => Ok(Engine::Table),
            other => Err(format!("unknown engine `{other}` (expected dense or table)")),
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Dense => "dense",
            Engine::Table => "table",
        })
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SolveOptions {
    /// `None` picks [`Engine::auto`].
    pub engine: Option<Engine>,
    pub a: f64,
    /// `None` uses [`amplifier::default_max_steps`].
    pub max_steps: Option<usize>,
    pub sim: SimConfig,
    /// Keep the final dense state in the outcome.
    pub keep_state: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            engine: None,
            a: amplifier::DEFAULT_A,
            max_steps: None,
            sim: SimConfig::default(),
            keep_state: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceSummary {
    pub n: usize,
    pub m: usize,
    pub clause_sizes: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AmplifierSummary {
    pub a: f64,
    pub max_steps: usize,
    pub m_star: Option<usize>,
    pub trace_len: usize,
    /// Present only for satisfiable instances.
    pub step_bounds: Option<StepBounds>,
}

/// Everything `solve` prints, in a fixed field order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub instance: InstanceSummary,
    pub layout: RegisterLayout,
    pub engine: Engine,
    pub satisfying_count: u64,
    pub q_squared: f64,
    /// `"r/2^n"`, only from the table engine.
    pub q_squared_exact: Option<String>,
    pub sat: bool,
    pub amplifier: AmplifierSummary,
    pub complexity: ComplexityReport,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Debug, Clone)]
pub struct SolveOutcome {
    pub report: RunReport,
    pub circuit: Circuit,
    pub trace: AmplificationTrace,
    pub state: Option<StateVector>,
}

pub fn solve(cs: &ClauseSet, opts: &SolveOptions) -> Result<SolveOutcome, Error> {
    let n = cs.num_vars();
    let circuit = synthesize(cs);
    let engine = opts
        .engine
        .unwrap_or_else(|| Engine::auto(circuit.width(), &opts.sim));

    let (count, q_squared, q_squared_exact, state) = match engine {
        Engine::Dense => {
            opts.sim.check_width(circuit.width())?;
            let zeros = vec![false; circuit.width()];
            let input = crate::simulator::basis_state(circuit.width(), &zeros, &opts.sim)?;
            let out = run(&circuit, input)?;
            let summary = success_probability(&out, circuit.layout());
            let count = if summary.is_sat() {
                (summary.q_squared * (1u64 << n) as f64).round() as u64
            } else {
                0
            };
            (count, summary.q_squared, None, opts.keep_state.then_some(out))
        }
        Engine::Table => {
            if n > MAX_TABLE_VARS {
                return Err(crate::simulator::SimError::TooManyVariables {
                    n,
                    limit: MAX_TABLE_VARS,
                }
                .into());
            }
            let table = truth_table_run(cs, &circuit)?;
            (
                table.count,
                table.q_squared(),
                Some(table.q_squared_exact()),
                None,
            )
        }
    };

    let max_steps = opts
        .max_steps
        .unwrap_or_else(|| amplifier::default_max_steps(n));
    let params = LogisticParams::new(opts.a, max_steps)?;
    let x0 = if count == 0 { 0.0 } else { q_squared };
    let trace = amplify(x0, &params)?;
    let bounds = if count > 0 {
        Some(step_bounds(n, count)?)
    } else {
        None
    };

    let complexity = complexity::report(cs, &circuit.census())?;
    let report = RunReport {
        instance: InstanceSummary {
            n,
            m: cs.num_clauses(),
            clause_sizes: cs.clause_sizes(),
        },
        layout: circuit.layout().clone(),
        engine,
        satisfying_count: count,
        q_squared,
        q_squared_exact,
        sat: count > 0,
        amplifier: AmplifierSummary {
            a: params.a,
            max_steps,
            m_star: trace.m_star,
            trace_len: trace.len(),
            step_bounds: bounds,
        },
        complexity,
    };
    Ok(SolveOutcome {
        report,
        circuit,
        trace,
        state,
    })
}

/// A `q²` given on the command line: `p/q`, `p/2^k` or a decimal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParsedQSquared {
    pub value: f64,
    /// `log₂` of the denominator when it is a power of two.
    pub n: Option<usize>,
}

pub fn parse_q_squared(text: &str) -> Result<ParsedQSquared, String> {
    let text = text.trim();
    let bad = || format!("cannot parse q² `{text}` (expected p/q, p/2^k or a decimal)");
    let parsed = if let Some((num, den)) = text.split_once('/') {
        let num: u64 = num.trim().parse().map_err(|_| bad())?;
        let den = den.trim();
        let den: u64 = match den.strip_prefix("2^") {
            Some(k) => {
                let k: u32 = k.parse().map_err(|_| bad())?;
                1u64.checked_shl(k).filter(|_| k < 64).ok_or_else(bad)?
            }
            None => den.parse().map_err(|_| bad())?,
        };
        if den == 0 || num > den {
            return Err(bad());
        }
        let n = den
            .is_power_of_two()
            .then(|| den.trailing_zeros() as usize)
            .filter(|&n| n > 0);
        ParsedQSquared {
            value: num as f64 / den as f64,
            n,
        }
    } else {
        let value: f64 = text.parse().map_err(|_| bad())?;
        ParsedQSquared { value, n: None }
    };
    if !(0.0..=1.0).contains(&parsed.value) {
        return Err(bad());
    }
    Ok(parsed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn worked() -> ClauseSet {
        ClauseSet::from_dimacs_clauses(4, &[&[1, 4, -2], &[2, 3, 4], &[1, -3], &[3, -1, -2]])
            .unwrap()
    }

    #[test]
    fn engines_agree_on_worked_example() {
        let cs = worked();
        let dense = solve(
            &cs,
            &SolveOptions {
                engine: Some(Engine::Dense),
                ..Default::default()
            },
        )
        .unwrap()
        .report;
        let table = solve(
            &cs,
            &SolveOptions {
                engine: Some(Engine::Table),
                ..Default::default()
            },
        )
        .unwrap()
        .report;
        assert_eq!(dense.satisfying_count, 7);
        assert_eq!(table.satisfying_count, 7);
        assert!((dense.q_squared - 0.4375).abs() < 1e-9);
        assert_eq!(table.q_squared, 0.4375);
        assert_eq!(table.q_squared_exact.as_deref(), Some("7/2^4"));
        assert_eq!(dense.q_squared_exact, None);
        assert!(dense.sat && table.sat);
        assert_eq!(dense.amplifier.m_star, table.amplifier.m_star);
        assert_eq!(dense.complexity.t_q_measured, 36);
    }

    #[test]
    fn auto_engine_falls_back_to_table() {
        let cs = worked();
        let opts = SolveOptions {
            sim: SimConfig::with_max_qubits(10).unwrap(),
            ..Default::default()
        };
        assert_eq!(solve(&cs, &opts).unwrap().report.engine, Engine::Table);
        assert_eq!(solve(&cs, &SolveOptions::default()).unwrap().report.engine, Engine::Dense);
    }

    #[test]
    fn dense_over_cap_is_an_error() {
        let opts = SolveOptions {
            engine: Some(Engine::Dense),
            sim: SimConfig::with_max_qubits(10).unwrap(),
            ..Default::default()
        };
        assert!(matches!(solve(&worked(), &opts), Err(Error::Sim(_))));
    }

    #[test]
    fn unsat_report() {
        let cs = ClauseSet::from_dimacs_clauses(1, &[&[1], &[-1]]).unwrap();
        let report = solve(&cs, &SolveOptions::default()).unwrap().report;
        assert!(!report.sat);
        assert_eq!(report.q_squared, 0.0);
        assert_eq!(report.amplifier.m_star, None);
        assert_eq!(report.amplifier.step_bounds, None);
    }

    #[test]
    fn json_is_deterministic() {
        let cs = worked();
        let a = solve(&cs, &SolveOptions::default()).unwrap().report.to_json();
        let b = solve(&cs, &SolveOptions::default()).unwrap().report.to_json();
        assert_eq!(a, b);
        let value: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(value["layout"]["s"], serde_json::json!([5, 7, 10, 12]));
        assert_eq!(value["engine"], "dense");
        assert_eq!(value["complexity"]["total"], 108);
    }

    #[test]
    fn engine_parsing() {
        assert_eq!("dense".parse::<Engine>(), Ok(Engine::Dense));
        assert_eq!("table".parse::<Engine>(), Ok(Engine::Table));
        assert!("sparse".parse::<Engine>().is_err());
    }

    #[test]
    fn q_squared_parsing() {
        assert_eq!(
            parse_q_squared("7/16"),
            Ok(ParsedQSquared { value: 0.4375, n: Some(4) })
        );
        assert_eq!(
            parse_q_squared("1/2^12"),
            Ok(ParsedQSquared { value: 1.0 / 4096.0, n: Some(12) })
        );
        assert_eq!(parse_q_squared("1/3").unwrap().n, None);
        assert_eq!(parse_q_squared("0").unwrap(), ParsedQSquared { value: 0.0, n: None });
        assert_eq!(parse_q_squared("0.25").unwrap().value, 0.25);
        for bad in ["", "x", "3/2", "1/0", "-0.1", "1.5", "1/2^70"] {
            assert!(parse_q_squared(bad).is_err(), "{bad}");
        }
    }
}
