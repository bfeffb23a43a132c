//! Parse DIMACS text and answer satisfiability by exhaustive enumeration.

use std::error::Error;

use omv_sat::cnf::{count_satisfying, enumerate_satisfying, parse_dimacs, Assignment};

const EXAMPLE1: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/data/example1.cnf"));
const CONTRADICTION: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/data/contradiction.cnf"));

pub fn run() -> Result<(), Box<dyn Error>> {
    let cs = parse_dimacs(EXAMPLE1)?;
    println!("n = {}, m = {}, sizes = {:?}", cs.num_vars(), cs.num_clauses(), cs.clause_sizes());

    let probe = Assignment::from(&[0u8, 0, 0, 1][..]);
    println!("eval {probe} = {}", cs.eval(&probe));

    let sat = enumerate_satisfying(&cs)?;
    println!("r = {}", sat.count);
    for w in &sat.witnesses {
        println!("  {w}");
    }

    let unsat = parse_dimacs(CONTRADICTION)?;
    println!("contradiction: r = {}", count_satisfying(&unsat)?);

    for bad in ["1 2 0\n", "p cnf 2 1\n1 3 0\n", "p cnf 2 1\n1 -1 0\n"] {
        println!("{:?} -> {}", bad, parse_dimacs(bad).unwrap_err());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
