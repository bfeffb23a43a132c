//! First-crossing step for every count r at fixed n, and the largest
//! crossing step as n grows, against the closed-form budget.

use std::collections::BTreeMap;
use std::error::Error;

use omv_sat::amplifier::{crossing_sweep, empirical_t_c, t_c, LogisticParams};

pub fn run() -> Result<(), Box<dyn Error>> {
    let n = 12;
    let rows = crossing_sweep(n, &LogisticParams::for_vars(n))?;
    let mut histogram: BTreeMap<usize, (u64, u64)> = BTreeMap::new();
    for row in &rows {
        let m = row.m_star.ok_or("no crossing")?;
        let entry = histogram.entry(m).or_insert((row.r, row.r));
        entry.1 = row.r;
    }
    println!("n = {n}: m* by r range");
    for (m, (lo, hi)) in &histogram {
        println!("  m* = {m}: r in {lo}..={hi}");
    }

    println!(" n  max m*  t_c");
    for n in 1..=16 {
        println!("{n:2}  {:6}  {:3}", empirical_t_c(n)?, t_c(n));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
