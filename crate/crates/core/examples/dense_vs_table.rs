//! The two simulation engines on the same instances: a full state vector
//! against bit-parallel propagation of every assignment.

use std::error::Error;
use std::time::Instant;

use omv_sat::circuit::synthesize;
use omv_sat::cnf::{count_satisfying, ClauseSet};
use omv_sat::simulator::{basis_state, run as run_circuit, success_probability, truth_table_run, SimConfig};

pub fn run() -> Result<(), Box<dyn Error>> {
    let instances = [
        ClauseSet::from_dimacs_clauses(4, &[&[1, 4, -2], &[2, 3, 4], &[1, -3], &[3, -1, -2]])?,
        ClauseSet::from_dimacs_clauses(4, &[&[1, -2, -3], &[-1, 2, 4], &[-1, 3, -4]])?,
        ClauseSet::from_dimacs_clauses(2, &[&[1, 2], &[-1], &[-2]])?,
    ];
    let config = SimConfig::default();
    for cs in &instances {
        let circuit = synthesize(cs);

        let start = Instant::now();
        let input = basis_state(circuit.width(), &vec![false; circuit.width()], &config)?;
        let state = run_circuit(&circuit, input)?;
        let dense = success_probability(&state, circuit.layout());
        let dense_time = start.elapsed();

        let start = Instant::now();
        let table = truth_table_run(cs, &circuit)?;
        let table_time = start.elapsed();

        println!(
            "N = {:2}: dense q^2 = {:.12} ({dense_time:?}), table q^2 = {} ({table_time:?}), oracle r = {}",
            circuit.width(),
            dense.q_squared,
            table.q_squared_exact(),
            count_satisfying(cs)?,
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
