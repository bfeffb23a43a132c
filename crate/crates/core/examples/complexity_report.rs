//! Gate census, closed-form counts and the product bound for a few shapes.

use std::error::Error;

use omv_sat::circuit::synthesize;
use omv_sat::cnf::ClauseSet;
use omv_sat::complexity::report;

pub fn run() -> Result<(), Box<dyn Error>> {
    let cases: Vec<(&str, ClauseSet)> = vec![
        ("worked", ClauseSet::from_dimacs_clauses(4, &[&[1, 4, -2], &[2, 3, 4], &[1, -3], &[3, -1, -2]])?),
        ("single unit", ClauseSet::from_dimacs_clauses(1, &[&[1]])?),
        ("negated units", ClauseSet::from_dimacs_clauses(3, &[&[-1], &[-2], &[-3]])?),
        ("wide clause", ClauseSet::from_dimacs_clauses(8, &[&[1, -2, 3, -4, 5, -6, 7, -8]])?),
    ];
    println!("{:14} {:>4} {:>6} {:>8} {:>6} {:>4} {:>6} {:>8}", "case", "T_Q", "closed", "literal", "bound", "T_C", "T", "T bound");
    for (name, cs) in &cases {
        let r = report(cs, &synthesize(cs).census())?;
        println!(
            "{name:14} {:>4} {:>6} {:>8} {:>6} {:>4} {:>6} {:>8}",
            r.t_q_measured, r.t_q_closed_form, r.t_q_literal, r.t_q_bound, r.t_c, r.total, r.total_bound
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
