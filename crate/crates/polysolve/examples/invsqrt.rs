//! The inverse-square-root equation: the necessary condition alone does
//! not guarantee a polynomial solution. On the branch where the
//! necessary condition holds, the tridiagonal determinant stays nonzero,
//! so no polynomial factor exists at any degree.
//!
//! ```bash
//! cargo run --example invsqrt
//! ```

use polysolve::conditions::invsqrt_nonexistence;
use polysolve::exact::{rat_i64, QuadExt};
use polysolve::fixtures::{build_invsqrt, InvSqrtParams};
use polysolve::recurrence::{find_polynomial_solutions, necessary_condition_residual};

fn main() {
    let l = rat_i64(0);
    println!("l = 0, lambda fixed on the necessary-condition branch:");
    println!(
        "{:>3} {:>16} {:>22} {:>10} {:>10}",
        "m", "lambda", "determinant", "~value", "solutions"
    );
    for m in 0..=6usize {
        let params = InvSqrtParams::on_nc_branch(l.clone(), m);
        let spec = build_invsqrt(&params).unwrap();
        let ncr = necessary_condition_residual(&spec, m, &QuadExt::zero());
        assert!(ncr.is_zero(), "the branch construction satisfies the NC");
        let delta = invsqrt_nonexistence(&l, m);
        let found = find_polynomial_solutions(&spec, m)
            .unwrap()
            .iter()
            .filter(|e| e.outcome.as_ref().is_ok_and(|c| c.is_solution))
            .count();
        println!(
            "{m:>3} {:>16} {:>22} {:>10.2} {found:>10}",
            params.lambda.to_string(),
            delta.to_string(),
            delta.to_f64()
        );
    }
    println!("\nevery determinant is nonzero: the necessary condition is not sufficient.");
}
