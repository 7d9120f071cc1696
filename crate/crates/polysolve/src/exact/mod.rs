//! Exact arithmetic foundation: arbitrary-precision rationals, the
//! quadratic extension Q(sqrt(d)), univariate polynomials over it, and
//! exact linear algebra (elimination, Cramer, fraction-free determinants).
//!
//! No floating point is used anywhere in this module; zero means zero.

mod linalg;
mod poly;
mod quadext;
mod rational;

pub use linalg::{
    det_poly_cofactor, det_poly_matrix, det_quadext, solve_affine, solve_cramer,
    solve_linear_exact, LinearSolution,
};
pub use poly::{cauchy_root_bound, reduce_quadratic_ext, Poly};
pub use quadext::QuadExt;
pub use rational::{exact_sqrt, parse_rational, rat, rat_i64, Rational};

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn small_rat() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=6).prop_map(|(n, d)| rat(n, d))
    }

    fn small_quadext(d: i64) -> impl Strategy<Value = QuadExt> {
        (small_rat(), small_rat()).prop_map(move |(a, b)| QuadExt::new(a, b, rat_i64(d)))
    }

    fn small_poly(d: i64) -> impl Strategy<Value = Poly> {
        proptest::collection::vec(small_quadext(d), 0..5).prop_map(Poly::new)
    }

    proptest! {
        #[test]
        fn rational_ops_commute(a in small_rat(), b in small_rat()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn quadext_ring_laws(a in small_quadext(6), b in small_quadext(6), c in small_quadext(6)) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn reduce_is_multiplicative(p in small_poly(0), q in small_poly(0)) {
            // rational-coefficient polynomials evaluated at t = sqrt(6)
            let d = rat_i64(6);
            let lhs = reduce_quadratic_ext(&(&p * &q), &d);
            let rhs = &reduce_quadratic_ext(&p, &d) * &reduce_quadratic_ext(&q, &d);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn bareiss_matches_cofactor_up_to_4x4(n in 1usize..=4, seed in proptest::collection::vec(-4i64..=4, 64)) {
            let mut it = seed.into_iter();
            let m: Vec<Vec<Poly>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            let c0 = it.next().unwrap_or(0);
                            let c1 = it.next().unwrap_or(0);
                            Poly::from_ints(&[c0, c1])
                        })
                        .collect()
                })
                .collect();
            let fast = det_poly_matrix(&m).unwrap();
            let slow = det_poly_cofactor(&m);
            prop_assert_eq!(fast, slow);
        }

        #[test]
        fn solve_resubstitutes(n in 1usize..=3, seed in proptest::collection::vec(-5i64..=5, 16)) {
            let mut it = seed.into_iter();
            let a: Vec<Vec<QuadExt>> = (0..n)
                .map(|_| (0..n).map(|_| QuadExt::from_int(it.next().unwrap_or(1))).collect())
                .collect();
            let rhs: Vec<QuadExt> =
                (0..n).map(|_| QuadExt::from_int(it.next().unwrap_or(0))).collect();
            if let Ok(x) = solve_linear_exact(&a, &rhs) {
                for (row, want) in a.iter().zip(&rhs) {
                    let mut acc = QuadExt::zero();
                    for (aij, xj) in row.iter().zip(&x) {
                        acc = &acc + &(aij * xj);
                    }
                    prop_assert_eq!(&acc, want);
                }
            }
        }
    }
}
