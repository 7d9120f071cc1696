//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (run with `--nocapture` to see them). Every tolerance is pinned
//! here; "exact" means exact equality in Q(sqrt(d)).

#![allow(clippy::neg_cmp_op_on_partial_ord)]

use num::traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use polysolve::conditions::invsqrt_nonexistence;
use polysolve::exact::{det_quadext, rat_i64, solve_linear_exact, Poly, QuadExt, Rational};
use polysolve::fixtures::{build_dirac, build_invsqrt, DiracParams, InvSqrtParams};
use polysolve::ode::{
    classify_origin, count_classes, indicial_roots, theorem_case, OdeSpec, SingularityClass,
    TheoremCase,
};
use polysolve::recurrence::{
    build_recurrence, candidate, evaluate_conditions, find_polynomial_solutions,
    necessary_condition_residual, solve_coefficients, solve_coefficients_cramer,
};
use polysolve::scheffe::{
    detect_scheffe, generic_families, hypergeometric_params, indicial_roots_scheffe,
    series_coefficients, termination_degree, two_term_recurrence,
};
use polysolve::verify::{compare_series, residual_polynomial, verify_candidate};

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn criterion(n: usize, what: &str, body: impl FnOnce() -> Result<(), String>) {
    match body() {
        Ok(()) => println!("[PASS] criterion {n}: {what}"),
        Err(msg) => {
            println!("[FAIL] criterion {n}: {what}: {msg}");
            panic!("criterion {n} failed: {msg}");
        }
    }
}

fn rng_for(tag: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x9e3779b97f4a7c15 ^ tag)
}

fn rand_rat(rng: &mut ChaCha8Rng) -> Rational {
    let num = rng.gen_range(-9i64..=9);
    let den = rng.gen_range(1i64..=4);
    polysolve::exact::rat(num, den)
}

fn rand_rat_nonzero(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let r = rand_rat(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

fn qr(r: Rational) -> QuadExt {
    QuadExt::from_rational(r)
}

fn rand_spec(rng: &mut ChaCha8Rng, n: usize) -> OdeSpec {
    loop {
        let alpha: Vec<QuadExt> = (0..=n).map(|_| qr(rand_rat(rng))).collect();
        let mut beta: Vec<QuadExt> = (0..n).map(|_| qr(rand_rat(rng))).collect();
        beta[n - 1] = qr(rand_rat_nonzero(rng));
        let tau: Vec<QuadExt> = (0..n - 1).map(|_| qr(rand_rat(rng))).collect();
        if let Ok(spec) = OdeSpec::new(alpha, beta, tau) {
            return spec;
        }
    }
}

#[test]
fn criterion_01_necessary_condition_identity() {
    criterion(
        1,
        "necessary-condition identity, n = 2..6, m = 0..8, exact",
        || {
            let mut rng = rng_for(1);
            for _ in 0..100 {
                for n in 2..=6usize {
                    let spec = rand_spec(&mut rng, n);
                    for m in 0..=8usize {
                        let got = necessary_condition_residual(&spec, m, &QuadExt::zero());
                        // independent recomputation from the raw entries
                        let mm = rat_i64(m as i64);
                        let want = spec.tau(n as i64 - 2).to_rational().unwrap()
                            - spec.alpha(n as i64).to_rational().unwrap()
                                * (&mm * (&mm - rat_i64(1)))
                            - spec.beta(n as i64 - 1).to_rational().unwrap() * &mm;
                        ensure!(
                            got == qr(want.clone()),
                            "n={n} m={m}: engine {got} vs formula {want}"
                        );
                    }
                }
            }
            Ok(())
        },
    );
}

/// The displayed determinant conditions of the worked n = 4 case.
mod displayed_n4 {
    use super::*;

    fn e(spec: &OdeSpec, which: char, k: i64) -> QuadExt {
        match which {
            'a' => spec.alpha(k),
            'b' => spec.beta(k),
            't' => spec.tau(k),
            _ => unreachable!(),
        }
    }

    pub fn matrices_m1(spec: &OdeSpec) -> (Vec<Vec<QuadExt>>, Vec<Vec<QuadExt>>) {
        let s1 = vec![
            vec![-e(spec, 't', 0), e(spec, 'b', 0)],
            vec![-e(spec, 't', 1), &e(spec, 'b', 1) - &e(spec, 't', 0)],
        ];
        let s2 = vec![
            vec![-e(spec, 't', 0), e(spec, 'b', 0)],
            vec![-e(spec, 't', 2), &e(spec, 'b', 2) - &e(spec, 't', 1)],
        ];
        (s1, s2)
    }

    // rows shared by the m = 2 and m = 3 displays
    fn row_a(spec: &OdeSpec) -> Vec<QuadExt> {
        vec![e(spec, 'b', 0), &QuadExt::from_int(2) * &e(spec, 'a', 0)]
    }

    fn row_b(spec: &OdeSpec) -> Vec<QuadExt> {
        vec![
            &e(spec, 'b', 1) - &e(spec, 't', 0),
            &QuadExt::from_int(2) * &(&e(spec, 'a', 1) + &e(spec, 'b', 0)),
        ]
    }

    pub fn solve_block_m2(spec: &OdeSpec) -> Vec<Vec<QuadExt>> {
        vec![row_a(spec), row_b(spec)]
    }

    pub fn s_matrices_m2(spec: &OdeSpec) -> (Vec<Vec<QuadExt>>, Vec<Vec<QuadExt>>) {
        let mut s1 = vec![
            vec![-e(spec, 't', 0)],
            vec![-e(spec, 't', 1)],
            vec![-e(spec, 't', 2)],
        ];
        s1[0].extend(row_a(spec));
        s1[1].extend(row_b(spec));
        s1[2].extend(vec![
            &e(spec, 'b', 2) - &e(spec, 't', 1),
            &(&QuadExt::from_int(2) * &(&e(spec, 'a', 2) + &e(spec, 'b', 1))) - &e(spec, 't', 0),
        ]);
        let mut s2 = vec![
            vec![-e(spec, 't', 0)],
            vec![-e(spec, 't', 1)],
            vec![QuadExt::zero()],
        ];
        s2[0].extend(row_a(spec));
        s2[1].extend(row_b(spec));
        s2[2].extend(vec![
            &e(spec, 'b', 3) - &e(spec, 't', 2),
            &(&QuadExt::from_int(2) * &(&e(spec, 'a', 3) + &e(spec, 'b', 2))) - &e(spec, 't', 1),
        ]);
        (s1, s2)
    }

    pub fn solve_block_m3(spec: &OdeSpec) -> Vec<Vec<QuadExt>> {
        // columns C1, C2, C3 of rows l = 0, 1, 2
        let six_a0 = &QuadExt::from_int(6) * &e(spec, 'a', 0);
        let three_2a1_b0 = &QuadExt::from_int(3)
            * &(&(&QuadExt::from_int(2) * &e(spec, 'a', 1)) + &e(spec, 'b', 0));
        vec![
            vec![
                e(spec, 'b', 0),
                &QuadExt::from_int(2) * &e(spec, 'a', 0),
                QuadExt::zero(),
            ],
            vec![
                &e(spec, 'b', 1) - &e(spec, 't', 0),
                &QuadExt::from_int(2) * &(&e(spec, 'a', 1) + &e(spec, 'b', 0)),
                six_a0,
            ],
            vec![
                &e(spec, 'b', 2) - &e(spec, 't', 1),
                &(&QuadExt::from_int(2) * &(&e(spec, 'a', 2) + &e(spec, 'b', 1)))
                    - &e(spec, 't', 0),
                three_2a1_b0,
            ],
        ]
    }

    pub fn s_matrices_m3(spec: &OdeSpec) -> (Vec<Vec<QuadExt>>, Vec<Vec<QuadExt>>) {
        let block = solve_block_m3(spec);
        let taus = [e(spec, 't', 0), e(spec, 't', 1), e(spec, 't', 2)];
        let border = |last: Vec<QuadExt>| -> Vec<Vec<QuadExt>> {
            let mut rows = Vec::new();
            for (i, row) in block.iter().enumerate() {
                let mut r = vec![-&taus[i]];
                r.extend(row.iter().cloned());
                rows.push(r);
            }
            let mut r = vec![QuadExt::zero()];
            r.extend(last);
            rows.push(r);
            rows
        };
        let s1 = border(vec![
            &e(spec, 'b', 3) - &e(spec, 't', 2),
            &(&QuadExt::from_int(2) * &(&e(spec, 'a', 3) + &e(spec, 'b', 2))) - &e(spec, 't', 1),
            &(&(&QuadExt::from_int(6) * &e(spec, 'a', 2))
                + &(&QuadExt::from_int(3) * &e(spec, 'b', 1)))
                - &e(spec, 't', 0),
        ]);
        let s2 = border(vec![
            QuadExt::zero(),
            &(&QuadExt::from_int(2) * &(&e(spec, 'a', 4) + &e(spec, 'b', 3))) - &e(spec, 't', 2),
            &(&(&QuadExt::from_int(6) * &e(spec, 'a', 3))
                + &(&QuadExt::from_int(3) * &e(spec, 'b', 2)))
                - &e(spec, 't', 1),
        ]);
        (s1, s2)
    }
}

#[test]
fn criterion_02_worked_n4_conditions() {
    criterion(
        2,
        "worked n = 4 determinant conditions at m = 1, 2, 3, exact",
        || {
            let mut rng = rng_for(2);
            let mut checked = 0usize;
            while checked < 50 {
                let mut alpha: Vec<QuadExt> = (0..=4).map(|_| qr(rand_rat(&mut rng))).collect();
                alpha[0] = qr(rand_rat_nonzero(&mut rng));
                let mut beta: Vec<QuadExt> = (0..4).map(|_| qr(rand_rat(&mut rng))).collect();
                beta[0] = qr(rand_rat_nonzero(&mut rng));
                beta[3] = qr(rand_rat_nonzero(&mut rng));
                let tau: Vec<QuadExt> = (0..3).map(|_| qr(rand_rat(&mut rng))).collect();
                let spec = OdeSpec::new(alpha, beta, tau).expect("valid draw");

                // ---- m = 1 (the C1 = tau0/beta0 display) ----
                let mat = build_recurrence(&spec, 1, &QuadExt::zero()).unwrap();
                let coeffs = match solve_coefficients(&mat) {
                    Ok(c) => c,
                    Err(_) => continue,
                };
                ensure!(
                    coeffs[1] == &spec.tau(0) / &spec.beta(0),
                    "m=1: C1 must be tau0/beta0"
                );
                let report = evaluate_conditions(&mat, &coeffs);
                let (s1m, s2m) = displayed_n4::matrices_m1(&spec);
                // the border column sits left of the block: moving it past the
                // m solve columns gives det = (-1)^m residual det(block)
                let det_m = -&spec.beta(0);
                ensure!(
                    det_quadext(&s1m) == &report.sufficient[0] * &det_m,
                    "m=1: S1 determinant mismatch"
                );
                ensure!(
                    det_quadext(&s2m) == &report.sufficient[1] * &det_m,
                    "m=1: S2 determinant mismatch"
                );
                let nc_closed = &spec.beta(3) - &spec.tau(2);
                ensure!(
                    report.necessary == &coeffs[1] * &nc_closed,
                    "m=1: NC must be C1 (beta3 - tau2)"
                );

                // ---- m = 2 (determinant quotients and 3x3 borders) ----
                let mat = build_recurrence(&spec, 2, &QuadExt::zero()).unwrap();
                let coeffs = match solve_coefficients(&mat) {
                    Ok(c) => c,
                    Err(_) => continue,
                };
                let block = displayed_n4::solve_block_m2(&spec);
                let det_block = det_quadext(&block);
                if det_block.is_zero() {
                    continue;
                }
                let rhs = vec![spec.tau(0), spec.tau(1)];
                let displayed = solve_linear_exact(&block, &rhs).unwrap();
                ensure!(
                    coeffs[1..] == displayed[..],
                    "m=2: coefficients must match the determinant quotients"
                );
                let report = evaluate_conditions(&mat, &coeffs);
                let (s1m, s2m) = displayed_n4::s_matrices_m2(&spec);
                // even m: no sign flip
                ensure!(
                    det_quadext(&s1m) == &report.sufficient[0] * &det_block,
                    "m=2: S1 determinant mismatch"
                );
                ensure!(
                    det_quadext(&s2m) == &report.sufficient[1] * &det_block,
                    "m=2: S2 determinant mismatch"
                );
                let nc_closed = &(&(&QuadExt::from_int(2) * &spec.alpha(4))
                    + &(&QuadExt::from_int(2) * &spec.beta(3)))
                    - &spec.tau(2);
                ensure!(
                    report.necessary == &coeffs[2] * &nc_closed,
                    "m=2: NC must be C2 (2 alpha4 + 2 beta3 - tau2)"
                );

                // ---- m = 3 (3x3 quotients, 4x4 borders) ----
                let mat = build_recurrence(&spec, 3, &QuadExt::zero()).unwrap();
                let coeffs = match solve_coefficients(&mat) {
                    Ok(c) => c,
                    Err(_) => continue,
                };
                let block = displayed_n4::solve_block_m3(&spec);
                let det_block = det_quadext(&block);
                if det_block.is_zero() {
                    continue;
                }
                let rhs = vec![spec.tau(0), spec.tau(1), spec.tau(2)];
                let displayed = solve_linear_exact(&block, &rhs).unwrap();
                ensure!(
                    coeffs[1..] == displayed[..],
                    "m=3: coefficients must match the determinant quotients"
                );
                let report = evaluate_conditions(&mat, &coeffs);
                let (s1m, s2m) = displayed_n4::s_matrices_m3(&spec);
                let neg_det = -&det_block;
                ensure!(
                    det_quadext(&s1m) == &report.sufficient[0] * &neg_det,
                    "m=3: S1 determinant mismatch"
                );
                ensure!(
                    det_quadext(&s2m) == &report.sufficient[1] * &neg_det,
                    "m=3: S2 determinant mismatch"
                );
                let nc_closed = &(&(&QuadExt::from_int(6) * &spec.alpha(4))
                    + &(&QuadExt::from_int(3) * &spec.beta(3)))
                    - &spec.tau(2);
                ensure!(
                    report.necessary == &coeffs[3] * &nc_closed,
                    "m=3: NC must be C3 (6 alpha4 + 3 beta3 - tau2)"
                );
                checked += 1;
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_03_heun_fixture() {
    criterion(
        3,
        "Heun fixture: unique m = 1 solution [1, 2], verified, exact",
        || {
            let spec = OdeSpec::from_ints(&[0, 1, 1, 1], &[1, 3, 2], &[2, 2]).unwrap();
            let entries = find_polynomial_solutions(&spec, 3).map_err(|e| e.to_string())?;
            let solutions: Vec<_> = entries
                .iter()
                .filter(|e| e.outcome.as_ref().is_ok_and(|c| c.is_solution))
                .collect();
            ensure!(
                solutions.len() == 1,
                "expected exactly one solution, got {}",
                solutions.len()
            );
            let entry = solutions[0];
            let cand = entry.outcome.as_ref().unwrap();
            ensure!(
                entry.m == 1 && cand.s.is_zero(),
                "solution must sit at m = 1, s = 0"
            );
            ensure!(
                cand.coeffs == vec![QuadExt::one(), QuadExt::from_int(2)],
                "coefficients must be [1, 2]"
            );
            let residual = residual_polynomial(&spec, &cand.s, &cand.coeffs).unwrap();
            ensure!(
                residual.is_zero,
                "independent residual must vanish identically"
            );
            ensure!(
                verify_candidate(&spec, cand),
                "verifier must confirm the candidate"
            );
            Ok(())
        },
    );
}

#[test]
fn criterion_04_hermite_fixture() {
    criterion(
        4,
        "Hermite fixture: m = 2 solution [1, 0, -2], verified, exact",
        || {
            let spec = OdeSpec::from_ints(&[1, 0, 0], &[0, -2], &[-4]).unwrap();
            let entries = find_polynomial_solutions(&spec, 3).map_err(|e| e.to_string())?;
            let hit = entries
                .iter()
                .find(|e| e.m == 2 && e.outcome.as_ref().is_ok_and(|c| c.is_solution));
            let Some(entry) = hit else {
                return Err("no m = 2 solution reported".into());
            };
            let cand = entry.outcome.as_ref().unwrap();
            ensure!(
                cand.coeffs == vec![QuadExt::one(), QuadExt::zero(), QuadExt::from_int(-2)],
                "coefficients must be [1, 0, -2]"
            );
            ensure!(
                verify_candidate(&spec, cand),
                "verifier must confirm the candidate"
            );
            for e in &entries {
                if e.m != 2 {
                    ensure!(
                        !e.outcome.as_ref().is_ok_and(|c| c.is_solution),
                        "no other degree admits a solution"
                    );
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_05_invsqrt_nonexistence() {
    criterion(
        5,
        "inverse-sqrt: NC satisfiable yet no polynomial solution, m = 0..6",
        || {
            let l = rat_i64(0);
            for m in 0..=6usize {
                let params = InvSqrtParams::on_nc_branch(l.clone(), m);
                let spec = build_invsqrt(&params).map_err(|e| e.to_string())?;
                let ncr = necessary_condition_residual(&spec, m, &QuadExt::zero());
                ensure!(ncr.is_zero(), "m={m}: NC must hold on the branch");
                let delta = invsqrt_nonexistence(&l, m);
                ensure!(!delta.is_zero(), "m={m}: determinant must be nonzero");
                if m == 1 {
                    ensure!(
                        delta == QuadExt::from_int(84),
                        "m=1: determinant must be 84, got {delta}"
                    );
                }
                let entries = find_polynomial_solutions(&spec, m).map_err(|e| e.to_string())?;
                for e in &entries {
                    ensure!(
                        !e.outcome.as_ref().is_ok_and(|c| c.is_solution),
                        "m={m}: no polynomial solution may be reported (found one at s={}, m={})",
                        e.s,
                        e.m
                    );
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_06_dirac_necessary_condition() {
    criterion(
        6,
        "Dirac NC vanishes exactly on E^2 = eB(m+l+gamma+3/2) + M^2",
        || {
            let mut rng = rng_for(6);
            let mut draws = 0usize;
            while draws < 20 {
                let e = rand_rat_nonzero(&mut rng);
                let l = rand_rat(&mut rng);
                let gamma = rand_rat_nonzero(&mut rng);
                let mass = rand_rat(&mut rng);
                let z = rand_rat_nonzero(&mut rng);
                let e_level = rand_rat_nonzero(&mut rng);
                if (&e_level + &mass).is_zero() {
                    continue;
                }
                for m in 0..=2usize {
                    let denom =
                        &e * (rat_i64(m as i64) + &l + &gamma + polysolve::exact::rat(3, 2));
                    if denom.is_zero() {
                        continue;
                    }
                    // solve B so the level curve holds exactly
                    let b = (&e_level * &e_level - &mass * &mass) / &denom;
                    if b.is_zero() {
                        continue; // beta[n-1] = -eB would vanish
                    }
                    let params = DiracParams {
                        e_level: e_level.clone(),
                        mass: mass.clone(),
                        l: l.clone(),
                        gamma: gamma.clone(),
                        z: z.clone(),
                        e: e.clone(),
                        b,
                    };
                    let spec = build_dirac(&params).map_err(|err| err.to_string())?;
                    let ncr = necessary_condition_residual(&spec, m, &QuadExt::zero());
                    ensure!(ncr.is_zero(), "NC must vanish on the curve (m={m})");

                    // off the curve it must not vanish
                    let mut shifted = &params.b + rat_i64(1);
                    if shifted.is_zero() {
                        shifted = &params.b + rat_i64(2);
                    }
                    let off = DiracParams {
                        b: shifted,
                        ..params.clone()
                    };
                    let spec_off = build_dirac(&off).map_err(|err| err.to_string())?;
                    let ncr_off = necessary_condition_residual(&spec_off, m, &QuadExt::zero());
                    ensure!(!ncr_off.is_zero(), "NC must move off the curve (m={m})");
                }
                draws += 1;
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_07_scheffe_detection_census() {
    criterion(
        7,
        "two-term structure census: n = 2, 3 families and generic templates",
        || {
            // the two n = 2 families
            let cases2 = [
                (
                    Poly::from_ints(&[0, 2, 3]),
                    Poly::from_ints(&[5, 7]),
                    Poly::from_ints(&[11]),
                    (1i64, 1u32),
                ),
                (
                    Poly::from_ints(&[1, 0, -1]),
                    Poly::from_ints(&[0, -2]),
                    Poly::from_ints(&[2]),
                    (2, 2),
                ),
            ];
            // the three n = 3 families
            let cases3 = [
                (
                    Poly::from_ints(&[0, 0, 1, 1]),
                    Poly::from_ints(&[0, 2, 1]),
                    Poly::from_ints(&[1, 1]),
                    (0i64, 1u32),
                ),
                (
                    Poly::from_ints(&[0, 1, 0, 1]),
                    Poly::from_ints(&[2, 0, 1]),
                    Poly::from_ints(&[0, 1]),
                    (1, 2),
                ),
                (
                    Poly::from_ints(&[1, 0, 0, 1]),
                    Poly::from_ints(&[0, 0, 1]),
                    Poly::from_ints(&[0, 1]),
                    (2, 3),
                ),
            ];
            for (p2, p1, p0, want) in cases2.iter().chain(cases3.iter()) {
                let form = detect_scheffe(p2, p1, p0)
                    .ok_or_else(|| format!("structure not detected for p2 = {p2}"))?;
                ensure!(
                    (form.m_shift, form.h) == *want,
                    "p2 = {p2}: expected {want:?}, got ({}, {})",
                    form.m_shift,
                    form.h
                );
            }
            for n in 2..=5usize {
                for t in generic_families(n) {
                    let form = detect_scheffe(&t.p2, &t.p1, &t.p0)
                        .ok_or_else(|| format!("template n={n} k={} not detected", t.k))?;
                    ensure!(
                        (form.m_shift, form.h) == (t.m_shift, t.h),
                        "template n={n} k={}: wrong (m, h)",
                        t.k
                    );
                    ensure!(
                        i64::from(form.h) == n as i64 + form.m_shift - 2,
                        "template n={n} k={}: h must equal n + m - 2",
                        t.k
                    );
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_08_two_term_hypergeometric_equivalence() {
    criterion(
        8,
        "two-term series vs hypergeometric form <= 1e-12 over 30 terms",
        || {
            let mut rng = rng_for(8);
            let x = 0.25f64;
            let mut checked = 0usize;
            while checked < 20 {
                // alternate between the shifted-linear and even-gap families
                let even = checked.is_multiple_of(2);
                let (p2, p1, p0) = if even {
                    // (a0 + a2 r^2) u'' + b1 r u' + g0 u
                    let a0 = rand_rat_nonzero(&mut rng);
                    let mut a2 = rand_rat_nonzero(&mut rng);
                    // keep |a2/a0| <= 2 so the argument stays within 1/2 at x^2
                    while (&a2 / &a0).to_string().len() > 6
                        || (a2.clone() / a0.clone()) > rat_i64(2)
                        || (a2.clone() / a0.clone()) < rat_i64(-2)
                    {
                        a2 = rand_rat_nonzero(&mut rng);
                    }
                    (
                        Poly::new(vec![qr(a0), QuadExt::zero(), qr(a2)]),
                        Poly::new(vec![QuadExt::zero(), qr(rand_rat(&mut rng))]),
                        Poly::constant(qr(rand_rat_nonzero(&mut rng))),
                    )
                } else {
                    // (a1 r + a2 r^2) u'' + (b0 + b1 r) u' + g0 u with
                    // b0/a1 = p/3 non-integer to dodge resonances
                    let a1 = rand_rat_nonzero(&mut rng);
                    let mut a2 = rand_rat_nonzero(&mut rng);
                    while (a2.clone() / a1.clone()) > rat_i64(2)
                        || (a2.clone() / a1.clone()) < rat_i64(-2)
                    {
                        a2 = rand_rat_nonzero(&mut rng);
                    }
                    let k = 3 * rng.gen_range(-3i64..=3) + 1; // p = 1 mod 3
                    let b0 = &a1 * polysolve::exact::rat(k, 3);
                    (
                        Poly::new(vec![QuadExt::zero(), qr(a1), qr(a2)]),
                        Poly::new(vec![qr(b0), qr(rand_rat(&mut rng))]),
                        Poly::constant(qr(rand_rat_nonzero(&mut rng))),
                    )
                };
                let Some(form) = detect_scheffe(&p2, &p1, &p0) else {
                    continue;
                };
                let Ok(roots) = indicial_roots_scheffe(&form) else {
                    continue;
                };
                for lambda in &roots.roots {
                    let rec = two_term_recurrence(&form, lambda);
                    let rep = hypergeometric_params(&form, lambda).map_err(|e| e.to_string())?;
                    match compare_series(&rec, &rep, x, 30) {
                        Ok(dev) => {
                            ensure!(
                                dev <= 1e-12,
                                "deviation {dev:.3e} exceeds 1e-12 for lambda = {lambda}"
                            );
                        }
                        Err(polysolve::Error::ResonantIndex { .. }) => continue,
                        Err(e) => return Err(e.to_string()),
                    }
                }
                checked += 1;
            }

            // the terminating Legendre instance: u = r exactly on lambda = 1
            let form = detect_scheffe(
                &Poly::from_ints(&[1, 0, -1]),
                &Poly::from_ints(&[0, -2]),
                &Poly::from_ints(&[2]),
            )
            .ok_or("legendre structure not detected")?;
            let rec = two_term_recurrence(&form, &QuadExt::one());
            ensure!(
                termination_degree(&rec) == Some(2),
                "legendre terminates at k = 2"
            );
            let coeffs = series_coefficients(&rec, 10).map_err(|e| e.to_string())?;
            ensure!(coeffs[0] == QuadExt::one(), "c0 = 1");
            ensure!(coeffs[1..].iter().all(QuadExt::is_zero), "u = r exactly");
            Ok(())
        },
    );
}

#[test]
fn criterion_09_oracle_equivalence() {
    criterion(
        9,
        "Cramer, elimination, and residual oracle agree on 200 instances",
        || {
            let mut rng = rng_for(9);
            let mut checked = 0usize;
            while checked < 200 {
                let n = rng.gen_range(2usize..=5);
                let case = rng.gen_range(0..3);
                let mut spec = rand_spec(&mut rng, n);
                // force the drawn spec into one of the three supported cases
                let mut alpha: Vec<QuadExt> = spec.alphas().to_vec();
                let mut beta: Vec<QuadExt> = spec.betas().to_vec();
                match case {
                    0 => alpha[0] = qr(rand_rat_nonzero(&mut rng)),
                    1 => {
                        alpha[0] = QuadExt::zero();
                        alpha[1] = qr(rand_rat_nonzero(&mut rng));
                    }
                    _ => {
                        alpha[0] = QuadExt::zero();
                        alpha[1] = QuadExt::zero();
                        alpha[2] = qr(rand_rat_nonzero(&mut rng));
                        beta[0] = QuadExt::zero();
                    }
                }
                beta[n - 1] = qr(rand_rat_nonzero(&mut rng));
                spec = match OdeSpec::new(alpha, beta, spec.taus().to_vec()) {
                    Ok(s) => s,
                    Err(_) => continue,
                };
                if theorem_case(&spec) == TheoremCase::Unsupported {
                    continue;
                }
                let Ok(roots) = indicial_roots(&spec) else {
                    continue;
                };
                let m = rng.gen_range(1usize..=5);
                for s in &roots.roots {
                    let mat = build_recurrence(&spec, m, s).unwrap();
                    let elim = solve_coefficients(&mat);
                    let cramer = solve_coefficients_cramer(&mat);
                    match (&elim, &cramer) {
                        (Ok(a), Ok(b)) => {
                            ensure!(a == b, "paths disagree on coefficients (m={m}, s={s})");
                            let report = evaluate_conditions(&mat, a);
                            let engine_zero = report.all_zero();
                            let oracle =
                                residual_polynomial(&spec, s, a).map_err(|e| e.to_string())?;
                            ensure!(
                                engine_zero == oracle.is_zero,
                                "engine and oracle verdicts differ (m={m}, s={s})"
                            );
                            let cand = candidate(&spec, m, s).map_err(|e| e.to_string())?;
                            ensure!(
                                cand.is_solution == (engine_zero && !a[m].is_zero()),
                                "candidate verdict inconsistent"
                            );
                            ensure!(
                                verify_candidate(&spec, &cand) == cand.is_solution,
                                "verifier must confirm every engine verdict"
                            );
                            checked += 1;
                        }
                        // degenerate draws: both paths must refuse together
                        (Err(_), Err(_)) => {}
                        (a, b) => {
                            // elimination resolves consistent underdetermined
                            // blocks that Cramer cannot; only that mix is legal
                            ensure!(
                                a.is_ok() && b.is_err(),
                                "only elimination may extend Cramer, got {a:?} vs {b:?}"
                            );
                        }
                    }
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_10_cauchy_euler_grid() {
    criterion(
        10,
        "Cauchy-Euler: degree-m solutions iff the exponent condition, |params| <= 5",
        || {
            for a2 in -5i64..=5 {
                if a2 == 0 {
                    continue;
                }
                for b1 in -5i64..=5 {
                    for t0 in -5i64..=5 {
                        let spec = OdeSpec::from_ints(&[0, 0, a2], &[0, b1], &[t0]).unwrap();
                        let roots = match indicial_roots(&spec) {
                            Ok(r) => r,
                            Err(_) => continue, // no real exponent: nothing to check
                        };
                        let entries =
                            find_polynomial_solutions(&spec, 4).map_err(|e| e.to_string())?;
                        for m in 0..=4usize {
                            let expected = roots
                                .roots
                                .iter()
                                .any(|s| necessary_condition_residual(&spec, m, s).is_zero());
                            let reported = entries.iter().any(|e| {
                                e.m == m && e.outcome.as_ref().is_ok_and(|c| c.is_solution)
                            });
                            ensure!(
                            expected == reported,
                            "a2={a2} b1={b1} t0={t0} m={m}: expected {expected}, reported {reported}"
                        );
                            if reported {
                                // every reported solution verifies independently
                                for e in entries.iter().filter(|e| e.m == m) {
                                    if let Ok(c) = &e.outcome {
                                        if c.is_solution {
                                            ensure!(
                                            verify_candidate(&spec, c),
                                            "a2={a2} b1={b1} t0={t0} m={m}: verification failed"
                                        );
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_11_classification_census() {
    criterion(
        11,
        "census sums to 2^(n+1)-1 and per-instance verdicts are consistent",
        || {
            for n in 2..=10u32 {
                let (o, r, i) = count_classes(n);
                ensure!(
                    o + r + i == (1u64 << (n + 1)) - 1,
                    "census must sum to 2^(n+1)-1 at n = {n}"
                );
            }
            for n in 2usize..=5 {
                for pattern in 1u32..(1 << (n + 1)) {
                    for b0 in [0i64, 1] {
                        let alpha: Vec<i64> =
                            (0..=n).map(|k| ((pattern >> k) & 1) as i64).collect();
                        let mut beta = vec![0i64; n];
                        beta[0] = b0;
                        beta[n - 1] = 1;
                        let tau = vec![1i64; n - 1];
                        let spec = OdeSpec::from_ints(&alpha, &beta, &tau).unwrap();
                        let class = classify_origin(&spec);
                        let case = theorem_case(&spec);
                        let consistent = matches!(
                            (case, class),
                            (TheoremCase::Case1, SingularityClass::Ordinary)
                                | (TheoremCase::Case2, SingularityClass::RegularSingular)
                                | (TheoremCase::Case3, SingularityClass::RegularSingular)
                                | (TheoremCase::Unsupported, SingularityClass::Irregular)
                        );
                        ensure!(
                            consistent,
                            "pattern {pattern:b} b0={b0} n={n}: case {case:?} vs class {class:?}"
                        );
                    }
                }
            }
            Ok(())
        },
    );
}
