//! A terminating two-term recurrence: the Legendre equation at l = 1,
//! its hypergeometric closed form, and the exact/floating cross-check.
//!
//! ```bash
//! cargo run --example legendre
//! ```

use polysolve::exact::{Poly, QuadExt};
use polysolve::scheffe::{
    detect_scheffe, hypergeometric_params, indicial_roots_scheffe, series_coefficients,
    termination_degree, two_term_recurrence, ParamFactor,
};
use polysolve::verify::{compare_series, hypergeometric_partial_sum};

fn main() {
    // (1 - r^2) u'' - 2r u' + 2 u = 0
    let p2 = Poly::from_ints(&[1, 0, -1]);
    let p1 = Poly::from_ints(&[0, -2]);
    let p0 = Poly::from_ints(&[2]);
    let form = detect_scheffe(&p2, &p1, &p0).expect("legendre has the (2, 2) structure");
    println!(
        "(1 - r^2) u'' - 2r u' + 2 u = 0: (m, h) = ({}, {})",
        form.m_shift, form.h
    );

    let roots = indicial_roots_scheffe(&form).unwrap();
    for lambda in &roots.roots {
        println!("\nbranch lambda = {lambda}:");
        let rec = two_term_recurrence(&form, lambda);
        let rep = hypergeometric_params(&form, lambda).unwrap();
        let params: Vec<String> = rep
            .upper
            .iter()
            .map(|f| match f {
                ParamFactor::Root(a) => a.to_string(),
                ParamFactor::Pair { sum, prod } => format!("(sum {sum}, prod {prod})"),
            })
            .collect();
        let lower: Vec<String> = rep
            .lower
            .iter()
            .map(|f| match f {
                ParamFactor::Root(a) => a.to_string(),
                ParamFactor::Pair { sum, prod } => format!("(sum {sum}, prod {prod})"),
            })
            .collect();
        println!(
            "  series = r^{lambda} * F(upper [{}]; lower [{}]; {} r^{})",
            params.join(", "),
            lower.join(", "),
            rep.argument_scale,
            rep.power_h
        );
        match termination_degree(&rec) {
            Some(k) => {
                println!("  terminates at grid index {k}");
                let coeffs = series_coefficients(&rec, k).unwrap();
                let c: Vec<String> = coeffs.iter().map(|v| v.to_string()).collect();
                println!("  polynomial coefficients: [{}]", c.join(", "));
            }
            None => println!("  infinite series on this branch"),
        }
        if *lambda == QuadExt::one() {
            // the terminating branch is u = r exactly
            let x = 0.25;
            let series = hypergeometric_partial_sum(&rep, x, 30).unwrap();
            println!("  F at x = {x}: {series} (so u = x * F = {})", x * series);
            let deviation = compare_series(&rec, &rep, x, 30).unwrap();
            println!("  max deviation recurrence vs closed form: {deviation:.3e}");
        }
    }
}
