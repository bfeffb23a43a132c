//! The four-variable, four-clause instance end to end: layout, circuit,
//! dense simulation, amplification and cost.

use std::error::Error;

use omv_sat::cnf::{enumerate_satisfying, parse_dimacs};
use omv_sat::report::{solve, Engine, SolveOptions};

const INSTANCE: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/data/worked_example.cnf"));

pub fn run() -> Result<(), Box<dyn Error>> {
    let cs = parse_dimacs(INSTANCE)?;
    println!("clauses: {}", cs.to_dimacs().trim_end().replace('\n', " | "));

    let outcome = solve(
        &cs,
        &SolveOptions {
            engine: Some(Engine::Dense),
            ..Default::default()
        },
    )?;
    let report = &outcome.report;
    let layout = &report.layout;
    println!("s = {:?}, s_f = {}, mu = {}, N = {}", layout.s, layout.s_f, layout.mu, layout.width);
    println!("clause outputs = {:?}", layout.clause_out);
    println!("gates: {} ({:?})", outcome.circuit.len(), outcome.circuit.census());
    println!("q^2 = {:.12} (dense, 2^{} amplitudes)", report.q_squared, layout.width);

    let witnesses = enumerate_satisfying(&cs)?;
    println!("brute force: r = {}", witnesses.count);
    for w in &witnesses.witnesses {
        println!("  {w}");
    }

    println!("amplifier: m* = {:?} from x0 = {}", report.amplifier.m_star, report.q_squared);
    for (m, x) in outcome.trace.orbit.iter().enumerate() {
        println!("  x_{m} = {x:.6}");
    }
    let c = &report.complexity;
    println!("T_Q = {}, T_C = {}, T = {} (bound {})", c.t_q_measured, c.t_c, c.total, c.total_bound);

    assert_eq!(layout.s, vec![5, 7, 10, 12]);
    assert_eq!(witnesses.count, 7);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
