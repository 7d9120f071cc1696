//! Find the polynomial solution of a Hermite-type equation and verify it
//! by independent residual substitution.
//!
//! ```bash
//! cargo run --example hermite
//! ```

use polysolve::ode::OdeSpec;
use polysolve::recurrence::find_polynomial_solutions;
use polysolve::verify::{residual_polynomial, verify_candidate};

fn main() {
    // y'' - 2r y' + 4 y = 0 has the degree-2 solution 1 - 2r^2
    let spec = OdeSpec::from_ints(&[1, 0, 0], &[0, -2], &[-4]).unwrap();

    for entry in find_polynomial_solutions(&spec, 4).unwrap() {
        print!("s = {}, m = {}: ", entry.s, entry.m);
        match &entry.outcome {
            Ok(c) if c.is_solution => {
                let coeffs: Vec<String> = c.coeffs.iter().map(|v| v.to_string()).collect();
                let verified = verify_candidate(&spec, c);
                println!("solution [{}], verified = {verified}", coeffs.join(", "));
                let residual = residual_polynomial(&spec, &c.s, &c.coeffs).unwrap();
                println!("    residual polynomial: {}", residual.residual);
            }
            Ok(c) => {
                println!("no solution (necessary residual {})", c.necessary_residual);
            }
            Err(e) => println!("skipped: {e}"),
        }
    }
}
