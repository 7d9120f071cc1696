//! Which equations admit a two-term recurrence: detection of the
//! `(m, h)` structure and the n generic solvable families.
//!
//! ```bash
//! cargo run --example scheffe_census
//! ```

use polysolve::exact::Poly;
use polysolve::scheffe::{detect_scheffe, generic_families, indicial_roots_scheffe};

fn detect_and_print(label: &str, p2: &Poly, p1: &Poly, p0: &Poly) {
    match detect_scheffe(p2, p1, p0) {
        Some(form) => {
            print!("{label}: (m, h) = ({}, {})", form.m_shift, form.h);
            if let Ok(roots) = indicial_roots_scheffe(&form) {
                let rs: Vec<String> = roots.roots.iter().map(|r| r.to_string()).collect();
                print!(", indicial exponents {}", rs.join(", "));
            }
            println!();
        }
        None => println!("{label}: no two-term structure"),
    }
}

fn main() {
    println!("the two n = 2 families:");
    detect_and_print(
        "  (a1 r + a2 r^2) u'' + (b0 + b1 r) u' + g0 u",
        &Poly::from_ints(&[0, 1, 1]),
        &Poly::from_ints(&[2, 1]),
        &Poly::from_ints(&[1]),
    );
    detect_and_print(
        "  (a0 + a2 r^2) u'' + b1 r u' + g0 u",
        &Poly::from_ints(&[1, 0, 1]),
        &Poly::from_ints(&[0, 1]),
        &Poly::from_ints(&[1]),
    );

    println!("\nthe three n = 3 families:");
    detect_and_print(
        "  (a2 r^2 + a3 r^3) u'' + (b1 r + b2 r^2) u' + (g0 + g1 r) u",
        &Poly::from_ints(&[0, 0, 1, 1]),
        &Poly::from_ints(&[0, 2, 1]),
        &Poly::from_ints(&[1, 1]),
    );
    detect_and_print(
        "  (a1 r + a3 r^3) u'' + (b0 + b2 r^2) u' + g1 r u",
        &Poly::from_ints(&[0, 1, 0, 1]),
        &Poly::from_ints(&[2, 0, 1]),
        &Poly::from_ints(&[0, 1]),
    );
    detect_and_print(
        "  (a0 + a3 r^3) u'' + b2 r^2 u' + g1 r u",
        &Poly::from_ints(&[1, 0, 0, 1]),
        &Poly::from_ints(&[0, 0, 1]),
        &Poly::from_ints(&[0, 1]),
    );

    println!("\ngeneric families re-detected, h = n + m - 2:");
    for n in 2..=5usize {
        for t in generic_families(n) {
            let form = detect_scheffe(&t.p2, &t.p1, &t.p0).expect("template detects");
            println!(
                "  n = {n}, k = {}: p2 = {}, detected (m, h) = ({}, {})",
                t.k, t.p2, form.m_shift, form.h
            );
            assert_eq!((form.m_shift, form.h), (t.m_shift, t.h));
        }
    }
}
