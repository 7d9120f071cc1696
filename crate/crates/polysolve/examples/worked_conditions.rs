//! Condition polynomials for an n = 4 equation with one unknown
//! parameter t: the sufficient determinants, the necessary condition,
//! their common root, and the solution recovered at that root.
//!
//! ```bash
//! cargo run --example worked_conditions
//! ```

use polysolve::conditions::{common_roots, parametric_conditions, ParamOdeSpec, RootLocation};
use polysolve::exact::{Poly, QuadExt};
use polysolve::recurrence::find_polynomial_solutions;
use polysolve::verify::verify_candidate;

fn c(v: i64) -> Poly {
    Poly::from_ints(&[v])
}

fn main() {
    // (r^4 + r^3 + r^2 + r + 2) y'' + (3r^3 + 4r^2 + 2r + 1) y'
    //   - (3r^2 + t r + 1) y = 0 with tau1 = t unknown
    let pspec = ParamOdeSpec::new(
        vec![c(2), c(1), c(1), c(1), c(1)],
        vec![c(1), c(2), c(4), c(3)],
        vec![c(1), Poly::from_ints(&[0, 1]), c(3)],
    )
    .unwrap();

    let m = 1;
    println!("degree m = {m}, unknown tau1 = t:");
    let sys = parametric_conditions(&pspec, m, &QuadExt::zero()).unwrap();
    for (k, s) in sys.sufficient.iter().enumerate() {
        println!("  S{}: {}", k + 1, s);
    }
    println!("  NC: {}", sys.necessary);

    let roots = common_roots(&sys).unwrap();
    for root in &roots {
        let loc = match &root.location {
            RootLocation::Exact(r) => format!("t = {r}"),
            RootLocation::Interval { lo, hi } => format!("t in ({lo}, {hi}]"),
        };
        println!(
            "  {loc}: conditions hold = {:?}, common = {}",
            root.conditions_hold, root.is_common
        );
    }

    // instantiate at the common root and recover the polynomial solution
    for root in roots.iter().filter(|r| r.is_common) {
        let RootLocation::Exact(t0) = &root.location else {
            continue;
        };
        let spec = pspec
            .instantiate(&QuadExt::from_rational(t0.clone()))
            .unwrap();
        println!("\nat t = {t0} the equation admits:");
        for entry in find_polynomial_solutions(&spec, m).unwrap() {
            if let Ok(cand) = &entry.outcome {
                if cand.is_solution {
                    let coeffs: Vec<String> = cand.coeffs.iter().map(|v| v.to_string()).collect();
                    println!(
                        "  m = {}: y = [{}], verified = {}",
                        entry.m,
                        coeffs.join(", "),
                        verify_candidate(&spec, cand)
                    );
                }
            }
        }
    }
}
