//! Logistic amplification of a single solution among 2^12 assignments.

use std::error::Error;

use omv_sat::amplifier::{amplify, density_view, step_bounds, t_c, LogisticParams};

pub fn run() -> Result<(), Box<dyn Error>> {
    let n = 12;
    let q2 = 1.0 / (1u64 << n) as f64;
    let trace = amplify(q2, &LogisticParams::for_vars(n))?;
    print!("{}", trace.to_csv());

    for (m, &x) in trace.orbit.iter().enumerate() {
        let rho = density_view(x)?;
        println!("m = {m}: diag(rho) = ({:.6}, {:.6}), <sigma_z> = {:.6}", rho.p_up, rho.p_down, rho.sigma_z());
    }
    let bounds = step_bounds(n, 1)?;
    println!("m* = {:?}, window [{}, {}], t_c = {}", trace.m_star, bounds.lower, bounds.upper, t_c(n));

    let zero = amplify(0.0, &LogisticParams::new(3.71, 5)?)?;
    println!("from 0: {:?}, m* = {:?}", zero.orbit, zero.m_star);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
