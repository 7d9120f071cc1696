//! Cauchy-Euler equations: degree-m polynomial factors exist exactly
//! when the indicial exponents differ by m.
//!
//! ```bash
//! cargo run --example cauchy_euler
//! ```

use polysolve::ode::{indicial_roots, OdeSpec};
use polysolve::recurrence::find_polynomial_solutions;
use polysolve::verify::verify_candidate;

fn main() {
    // r^2 y'' - 2 y = 0: exponents 2 and -1, gap 3
    let spec = OdeSpec::from_ints(&[0, 0, 1], &[0, 0], &[2]).unwrap();
    let roots = indicial_roots(&spec).unwrap();
    let root_strs: Vec<String> = roots.roots.iter().map(|r| r.to_string()).collect();
    println!(
        "r^2 y'' - 2 y = 0, indicial exponents: {}",
        root_strs.join(", ")
    );

    for entry in find_polynomial_solutions(&spec, 4).unwrap() {
        if let Ok(c) = &entry.outcome {
            if c.is_solution {
                let coeffs: Vec<String> = c.coeffs.iter().map(|v| v.to_string()).collect();
                println!(
                    "  s = {}, m = {}: coefficients [{}], verified = {}",
                    entry.s,
                    entry.m,
                    coeffs.join(", "),
                    verify_candidate(&spec, c)
                );
            }
        }
    }
    println!("  (the degree-3 factor rides on the lower exponent: y = r^-1 (1 + r^3))");

    // grid demonstration: solutions appear exactly on the exponent gap
    println!("\nsmall integer grid (alpha2 = 1, tau0 varying):");
    for tau0 in 1..=5i64 {
        let spec = OdeSpec::from_ints(&[0, 0, 1], &[0, 0], &[tau0]).unwrap();
        let Ok(roots) = indicial_roots(&spec) else {
            println!("  tau0 = {tau0}: no real indicial exponents");
            continue;
        };
        if roots.roots.len() < 2 || !roots.roots[0].is_rational() {
            println!("  tau0 = {tau0}: irrational exponents, no integer gap");
            continue;
        }
        let gap = &roots.roots[1] - &roots.roots[0];
        let degrees: Vec<usize> = find_polynomial_solutions(&spec, 4)
            .unwrap()
            .iter()
            .filter(|e| e.outcome.as_ref().is_ok_and(|c| c.is_solution) && e.m > 0)
            .map(|e| e.m)
            .collect();
        println!("  tau0 = {tau0}: exponent gap {gap}, positive-degree solutions at {degrees:?}");
    }
}
