//! Compile a clause set to gates, print the text form, and read it back.

use std::error::Error;

use omv_sat::circuit::{compute_layout, expand_clause, parse_gate_list, synthesize};
use omv_sat::cnf::ClauseSet;

pub fn run() -> Result<(), Box<dyn Error>> {
    let cs = ClauseSet::from_dimacs_clauses(3, &[&[1, -2], &[2, 3, -1], &[3]])?;
    let layout = compute_layout(&cs);
    println!("layout: s = {:?}, N = {}, clause outputs = {:?}", layout.s, layout.width, layout.clause_out);

    for k in 1..=cs.num_clauses() {
        let gates = expand_clause(&cs, &layout, k);
        let text: Vec<String> = gates.iter().map(ToString::to_string).collect();
        println!("clause {k}: {}", text.join("; "));
    }

    let circuit = synthesize(&cs);
    let text = circuit.to_text();
    print!("{text}");

    let (width, gates) = parse_gate_list(&text)?;
    assert_eq!(width, circuit.width());
    assert_eq!(gates, circuit.gates());
    println!("round trip ok, census {:?}", circuit.census());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
