//! Classify equations at the origin and enumerate the census of
//! leading-coefficient patterns.
//!
//! ```bash
//! cargo run --example classify
//! ```

use polysolve::ode::{classify_origin, count_classes, indicial_roots, theorem_case, OdeSpec};

fn show(label: &str, spec: &OdeSpec) {
    println!("{label}");
    println!("  class: {}", classify_origin(spec));
    println!("  case:  {}", theorem_case(spec));
    match indicial_roots(spec) {
        Ok(r) => {
            let roots: Vec<String> = r.roots.iter().map(|s| s.to_string()).collect();
            println!("  indicial exponents: {}", roots.join(", "));
        }
        Err(e) => println!("  indicial exponents: {e}"),
    }
    println!();
}

fn main() {
    // ordinary origin: plain power series
    let hermite = OdeSpec::from_ints(&[1, 0, 0], &[0, -2], &[-4]).unwrap();
    show("y'' - 2r y' + 4 y = 0", &hermite);

    // regular singular origin with alpha1 leading
    let heun = OdeSpec::from_ints(&[0, 1, 1, 1], &[1, 3, 2], &[2, 2]).unwrap();
    show(
        "(r^3 + r^2 + r) y'' + (2r^2 + 3r + 1) y' - (2r + 2) y = 0",
        &heun,
    );

    // regular singular origin with alpha2 leading (Cauchy-Euler type)
    let euler = OdeSpec::from_ints(&[0, 0, 1], &[0, 0], &[2]).unwrap();
    show("r^2 y'' - 2 y = 0", &euler);

    // irregular origin: rejected by every constructive theorem
    let irregular = OdeSpec::from_ints(&[0, 0, 1], &[1, 1], &[1]).unwrap();
    show("r^2 y'' + (r + 1) y' - y = 0", &irregular);

    println!("census of the 2^(n+1)-1 nonzero leading patterns:");
    println!(
        "{:>3} {:>10} {:>10} {:>10} {:>12}",
        "n", "ordinary", "regular", "irregular", "total"
    );
    for n in 2..=10 {
        let (o, r, i) = count_classes(n);
        println!("{n:>3} {o:>10} {r:>10} {i:>10} {:>12}", o + r + i);
    }
}
