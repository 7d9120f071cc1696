//! Energy quantization of the planar Dirac problem in a magnetic field:
//! the necessary condition for a degree-m polynomial factor pins the
//! energy to E^2 = eB(m + l + gamma + 3/2) + M^2.
//!
//! ```bash
//! cargo run --example dirac
//! ```

use polysolve::conditions::rational_roots;
use polysolve::exact::{rat, rat_i64, Poly, QuadExt};
use polysolve::fixtures::{build_dirac, DiracParams};
use polysolve::recurrence::{build_recurrence, necessary_condition_residual};

fn main() {
    let base = DiracParams {
        e_level: rat_i64(0), // filled per level below
        mass: rat_i64(0),
        l: rat_i64(0),
        gamma: rat(1, 2),
        z: rat_i64(1),
        e: rat_i64(1),
        b: rat_i64(2),
    };
    println!("e = 1, B = 2, l = 0, gamma = 1/2, M = 0, Z = 1\n");

    for m in 0..=3usize {
        let curve = &base.e * &base.b * (rat_i64(m as i64) + &base.l + &base.gamma + rat(3, 2))
            + &base.mass * &base.mass;
        let poly = Poly::from_rationals(&[-curve.clone(), rat_i64(0), rat_i64(1)]);
        println!("m = {m}: E^2 = {curve}, energy polynomial {poly}");
        let roots = rational_roots(&poly).unwrap_or_default();
        if roots.is_empty() {
            println!("   no rational energy (E = +-sqrt({curve}))");
            continue;
        }
        for e_root in roots {
            let p = DiracParams {
                e_level: e_root.clone(),
                ..base.clone()
            };
            let spec = build_dirac(&p).unwrap();
            let ncr = necessary_condition_residual(&spec, m, &QuadExt::zero());
            println!("   E = {e_root}: necessary residual = {ncr}");
            // the two condition rows at this energy
            let mat = build_recurrence(&spec, m, &QuadExt::zero()).unwrap();
            let n = spec.n();
            let one = vec![QuadExt::one(); 1];
            if m == 0 {
                for (k, row) in (m..m + n - 2).enumerate() {
                    println!("   S{}: {}", k + 1, mat.row_residual(row, &one));
                }
            }
        }
    }
}
