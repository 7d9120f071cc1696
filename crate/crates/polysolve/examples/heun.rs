//! Polynomial solutions of the general Heun equation: the integer demo
//! instance and the canonical-form builder.
//!
//! ```bash
//! cargo run --example heun
//! ```

use polysolve::exact::{rat, rat_i64};
use polysolve::fixtures::{build_heun, HeunParams};
use polysolve::ode::indicial_roots;
use polysolve::recurrence::{
    build_recurrence, evaluate_conditions, find_polynomial_solutions, solve_coefficients,
};
use polysolve::verify::verify_candidate;

fn main() {
    // (r^3 + r^2 + r) y'' + (2r^2 + 3r + 1) y' - (2r + 2) y = 0
    let spec = polysolve::ode::OdeSpec::from_ints(&[0, 1, 1, 1], &[1, 3, 2], &[2, 2]).unwrap();

    println!("integer Heun instance, scanning degrees 0..3:");
    for entry in find_polynomial_solutions(&spec, 3).unwrap() {
        if let Ok(c) = &entry.outcome {
            if c.is_solution {
                let coeffs: Vec<String> = c.coeffs.iter().map(|v| v.to_string()).collect();
                println!(
                    "  m = {}: y = r^{} ({}) verified = {}",
                    entry.m,
                    c.s,
                    coeffs.join(" + r*"),
                    verify_candidate(&spec, c)
                );
            }
        }
    }

    // the degree-1 conditions: C1 = tau0/beta0, one sufficient row, one NC
    let mat = build_recurrence(&spec, 1, &polysolve::exact::QuadExt::zero()).unwrap();
    let coeffs = solve_coefficients(&mat).unwrap();
    let report = evaluate_conditions(&mat, &coeffs);
    println!("\ndegree-1 structure: C1 = {}", coeffs[1]);
    println!("  sufficient residual (SC): {}", report.sufficient[0]);
    println!("  necessary residual (NC):  {}", report.necessary);

    // canonical-form parameters mapped onto the coefficient table
    let params = HeunParams {
        a: rat_i64(2),
        gamma: rat_i64(1),
        delta: rat(1, 2),
        epsilon: rat(1, 2),
        alpha: rat_i64(1),
        beta: rat_i64(-1),
        q: rat_i64(0),
    };
    let canonical = build_heun(&params).unwrap();
    println!("\ncanonical-form build (a=2, gamma=1, delta=eps=1/2, alpha=1, beta=-1, q=0):");
    println!("  fuchsian constraint satisfied: {}", params.fuchsian());
    let roots = indicial_roots(&canonical).unwrap();
    let root_strs: Vec<String> = roots.roots.iter().map(|r| r.to_string()).collect();
    println!("  indicial exponents: {}", root_strs.join(", "));
    for entry in find_polynomial_solutions(&canonical, 2).unwrap() {
        if let Ok(c) = &entry.outcome {
            if c.is_solution {
                let coeffs: Vec<String> = c.coeffs.iter().map(|v| v.to_string()).collect();
                println!(
                    "  polynomial solution at s = {}, m = {}: [{}]",
                    entry.s,
                    entry.m,
                    coeffs.join(", ")
                );
            }
        }
    }
}
