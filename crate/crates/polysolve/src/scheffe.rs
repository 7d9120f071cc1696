//! Two-term-recurrence structure detection and hypergeometric closed
//! forms.
//!
//! An equation `p2 u'' + p1 u' + p0 u = 0` has a two-term recurrence
//! between series coefficients at the origin exactly when there are an
//! integer shift `m` and a gap `h >= 1` such that every
//! `q_j(r) = p_j(r) r^(m-j)` is supported on the two exponents `{0, h}`.
//! The coefficients then satisfy `c_k = -N(k)/D(k) c_{k-h}` with
//! quadratics N, D built from the six q-coefficients, and the series is a
//! generalized hypergeometric function of argument proportional to `r^h`.

use crate::error::{Error, Result};
use crate::exact::{Poly, QuadExt};
use crate::ode::OdeSpec;

/// The detected `(m, h)` structure with the six defining coefficients
/// `q[j] = [q_{j,0}, q_{j,h}]` for `j = 0, 1, 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScheffeForm {
    pub m_shift: i64,
    pub h: u32,
    pub q: [[QuadExt; 2]; 3],
}

impl ScheffeForm {
    pub fn q_at(&self, j: usize, h_part: bool) -> &QuadExt {
        &self.q[j][usize::from(h_part)]
    }

    /// Rebuild the input polynomials `p_j = q_j r^(j-m)`.
    pub fn reconstruct(&self) -> [Poly; 3] {
        let mut out = [Poly::zero(), Poly::zero(), Poly::zero()];
        for (j, item) in out.iter_mut().enumerate() {
            let base = j as i64 - self.m_shift;
            let mut p = Poly::zero();
            if !self.q[j][0].is_zero() {
                let e = usize::try_from(base).expect("q[j][0] != 0 requires j - m >= 0");
                p = &p + &Poly::monomial(self.q[j][0].clone(), e);
            }
            if !self.q[j][1].is_zero() {
                let e = usize::try_from(base + self.h as i64)
                    .expect("q[j][h] != 0 requires j - m + h >= 0");
                p = &p + &Poly::monomial(self.q[j][1].clone(), e);
            }
            *item = p;
        }
        out
    }
}

/// Indicial exponents of the detected form: roots of
/// `q_{2,0} L(L-1) + q_{1,0} L + q_{0,0} = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScheffeIndicialRoots {
    pub roots: Vec<QuadExt>,
    /// True when the quadratic has a double root (the second, logarithmic
    /// solution is out of scope).
    pub repeated: bool,
}

/// The recurrence `c_k = -N(k)/D(k) c_{k-h}` on one indicial branch.
/// `num` and `den` hold the quadratics as coefficient triples in k
/// (constant, linear, quadratic).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoTermRecurrence {
    pub lambda: QuadExt,
    pub h: u32,
    pub num: [QuadExt; 3],
    pub den: [QuadExt; 3],
}

impl TwoTermRecurrence {
    pub fn n_at(&self, k: i64) -> QuadExt {
        eval_quadratic(&self.num, k)
    }

    pub fn d_at(&self, k: i64) -> QuadExt {
        eval_quadratic(&self.den, k)
    }
}

fn eval_quadratic(c: &[QuadExt; 3], k: i64) -> QuadExt {
    let kq = QuadExt::from_int(k);
    &(&(&(&c[2] * &kq) + &c[1]) * &kq) + &c[0]
}

/// One linear factor `(k + value)` of a term-ratio quadratic, or an
/// irreducible quadratic kept as the exact (sum, product) of its roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamFactor {
    Root(QuadExt),
    Pair { sum: QuadExt, prod: QuadExt },
}

/// Hypergeometric description of the series on one branch: the terms obey
/// `T_{k+1}/T_k = prod(upper) / (prod(lower) (k+1)) * argument_scale * r^h`
/// and the solution is `r^lambda` times the series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypergeometricRep {
    pub upper: Vec<ParamFactor>,
    pub lower: Vec<ParamFactor>,
    pub argument_scale: QuadExt,
    pub power_h: u32,
    pub lambda: QuadExt,
}

/// One of the n generic solvable families: both building views (the
/// Scheffe triple and the equation coefficients) plus the predicted
/// `(m, h)`.
#[derive(Debug, Clone)]
pub struct ScheffeTemplate {
    pub k: usize,
    pub p2: Poly,
    pub p1: Poly,
    pub p0: Poly,
    pub m_shift: i64,
    pub h: u32,
}

impl ScheffeTemplate {
    /// The same family as an equation spec (`tau = -p0` coefficients).
    pub fn to_ode_spec(&self) -> Result<OdeSpec> {
        let n = self.p2.degree().unwrap_or(0);
        let pad = |p: &Poly, len: usize| -> Vec<QuadExt> { (0..len).map(|k| p.coeff(k)).collect() };
        let neg = -&self.p0;
        OdeSpec::new(pad(&self.p2, n + 1), pad(&self.p1, n), pad(&neg, n - 1))
    }
}

fn support(p: &Poly) -> Vec<(i64, QuadExt)> {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, c)| (e as i64, c.clone()))
        .collect()
}

/// Search for the `(m, h)` structure of the triple `(p2, p1, p0)`.
/// Returns `None` when no shift/gap pair puts every `q_j` on `{0, h}`;
/// when several qualify, the smallest gap wins.
pub fn detect_scheffe(p2: &Poly, p1: &Poly, p0: &Poly) -> Option<ScheffeForm> {
    assert!(
        !p2.is_zero(),
        "detect_scheffe requires a nonzero leading polynomial"
    );
    let supports = [support(p0), support(p1), support(p2)];
    if supports.iter().any(|s| s.len() > 2) {
        return None;
    }

    // two-point polynomials force both h and m
    let mut forced_h: Option<i64> = None;
    let mut forced_m: Option<i64> = None;
    for (j, supp) in supports.iter().enumerate() {
        if supp.len() == 2 {
            let gap = supp[1].0 - supp[0].0;
            if forced_h.is_some_and(|h| h != gap) {
                return None;
            }
            forced_h = Some(gap);
            let m = j as i64 - supp[0].0;
            if forced_m.is_some_and(|mm| mm != m) {
                return None;
            }
            forced_m = Some(m);
        }
    }

    let assemble = |m: i64, h: i64| -> Option<ScheffeForm> {
        if h < 1 {
            return None;
        }
        let mut q = [
            [QuadExt::zero(), QuadExt::zero()],
            [QuadExt::zero(), QuadExt::zero()],
            [QuadExt::zero(), QuadExt::zero()],
        ];
        let mut has_zero_part = false;
        let mut has_h_part = false;
        for (j, supp) in supports.iter().enumerate() {
            for (e, c) in supp {
                let offset = e + m - j as i64;
                if offset == 0 {
                    q[j][0] = c.clone();
                    has_zero_part = true;
                } else if offset == h {
                    q[j][1] = c.clone();
                    has_h_part = true;
                } else {
                    return None;
                }
            }
        }
        (has_zero_part && has_h_part).then_some(ScheffeForm {
            m_shift: m,
            h: h as u32,
            q,
        })
    };

    if let (Some(h), Some(m)) = (forced_h, forced_m) {
        return assemble(m, h);
    }
    if forced_h.is_some() {
        return None;
    }

    // single-point supports only: try each m that pins some q_j at
    // exponent zero; the smallest valid gap wins
    let mut best: Option<ScheffeForm> = None;
    for (j, supp) in supports.iter().enumerate() {
        for (e, _) in supp {
            let m = j as i64 - e;
            let mut gap = None;
            let mut ok = true;
            for (j2, supp2) in supports.iter().enumerate() {
                for (e2, _) in supp2 {
                    let offset = e2 + m - j2 as i64;
                    if offset < 0 {
                        ok = false;
                    } else if offset > 0 {
                        if gap.is_some_and(|g: i64| g != offset) {
                            ok = false;
                        }
                        gap = Some(offset);
                    }
                }
            }
            if !ok {
                continue;
            }
            let Some(h) = gap else { continue };
            if let Some(form) = assemble(m, h) {
                if best.as_ref().is_none_or(|b| form.h < b.h) {
                    best = Some(form);
                }
            }
        }
    }
    best
}

/// Indicial roots of a detected form.
pub fn indicial_roots_scheffe(form: &ScheffeForm) -> Result<ScheffeIndicialRoots> {
    let q20 = form.q_at(2, false);
    let q10 = form.q_at(1, false);
    let q00 = form.q_at(0, false);
    if q20.is_zero() {
        if q10.is_zero() {
            return Err(Error::InvalidSpec(
                "indicial equation degenerates: q20 = q10 = 0".into(),
            ));
        }
        return Ok(ScheffeIndicialRoots {
            roots: vec![-&(q00 / q10)],
            repeated: false,
        });
    }
    // q20 L^2 + (q10 - q20) L + q00 = 0
    let gap = q20 - q10;
    let disc = &(&gap * &gap) - &(&(&QuadExt::from_int(4) * q20) * q00);
    let disc_rat = disc.to_rational().ok_or(Error::UnsupportedField)?;
    if disc_rat < num::traits::Zero::zero() {
        return Err(Error::NoRealIndicialRoot);
    }
    let sqrt_disc = QuadExt::sqrt_of(disc_rat);
    let two_q20 = &QuadExt::from_int(2) * q20;
    let mut roots = vec![
        &(&gap + &sqrt_disc) / &two_q20,
        &(&gap - &sqrt_disc) / &two_q20,
    ];
    roots.sort_by(|a, b| a.partial_cmp(b).expect("roots share one radicand"));
    let repeated = roots[0] == roots[1];
    if repeated {
        roots.pop();
    }
    Ok(ScheffeIndicialRoots { roots, repeated })
}

/// The recurrence quadratics on branch `lambda`.
pub fn two_term_recurrence(form: &ScheffeForm, lambda: &QuadExt) -> TwoTermRecurrence {
    let h = form.h;
    let mu = lambda - &QuadExt::from_int(h as i64);
    let quad = |c2: &QuadExt, c1: &QuadExt, c0: &QuadExt, shift: &QuadExt| -> [QuadExt; 3] {
        // c2 (k+shift)(k+shift-1) + c1 (k+shift) + c0 as a triple in k
        let two_shift_m1 = &(&QuadExt::from_int(2) * shift) - &QuadExt::one();
        let k1 = &(c2 * &two_shift_m1) + c1;
        let k0 = &(&(c2 * &(shift * &(shift - &QuadExt::one()))) + &(c1 * shift)) + c0;
        [k0, k1, c2.clone()]
    };
    TwoTermRecurrence {
        lambda: lambda.clone(),
        h,
        num: quad(
            form.q_at(2, true),
            form.q_at(1, true),
            form.q_at(0, true),
            &mu,
        ),
        den: quad(
            form.q_at(2, false),
            form.q_at(1, false),
            form.q_at(0, false),
            lambda,
        ),
    }
}

/// Exact series coefficients `c_0..c_count` (zero off the h-grid).
/// `D(k) = 0` with a forcing numerator is the unsupported log case.
pub fn series_coefficients(rec: &TwoTermRecurrence, count: usize) -> Result<Vec<QuadExt>> {
    let h = rec.h as usize;
    let mut c = vec![QuadExt::zero(); count + 1];
    c[0] = QuadExt::one();
    for k in h..=count {
        if k % h != 0 {
            continue;
        }
        let den = rec.d_at(k as i64);
        let forcing = &rec.n_at(k as i64) * &c[k - h];
        if den.is_zero() {
            if forcing.is_zero() {
                continue; // free coefficient; take the minimal branch
            }
            return Err(Error::ResonantIndex { k: k as i64 });
        }
        c[k] = -&(&forcing / &den);
    }
    Ok(c)
}

/// Smallest grid index `k >= h` with `N(k) = 0`; past it the series
/// truncates to a polynomial.
pub fn termination_degree(rec: &TwoTermRecurrence) -> Option<usize> {
    let h = rec.h as usize;
    let [n0, n1, n2] = &rec.num;
    if n2.is_zero() && n1.is_zero() {
        return n0.is_zero().then_some(h);
    }
    if n2.is_zero() {
        // single root k = -n0/n1
        let root = -&(n0 / n1);
        let k = root.to_rational().filter(|r| r.is_integer())?;
        let k: i64 = num::traits::ToPrimitive::to_i64(k.numer())?;
        return (k >= h as i64 && k % h as i64 == 0).then_some(k as usize);
    }
    // quadratic: scan the grid up to a Cauchy-style root bound
    let bound = 1.0
        + f64::max(
            (n1.to_f64() / n2.to_f64()).abs(),
            (n0.to_f64() / n2.to_f64()).abs().sqrt(),
        );
    let mut k = h;
    while (k as f64) <= bound + h as f64 {
        if rec.n_at(k as i64).is_zero() {
            return Some(k);
        }
        k += h;
    }
    None
}

/// Factor a quadratic `c2 k^2 + c1 k + c0` into `scale * prod(k + a_i)`.
/// Returns the leading scale and the factors; an irreducible (or
/// irrational-over-the-ambient-field) quadratic stays a (sum, product)
/// pair.
fn factor_term_quadratic(c: &[QuadExt; 3]) -> (QuadExt, Vec<ParamFactor>) {
    let [c0, c1, c2] = c;
    if c2.is_zero() {
        if c1.is_zero() {
            return (c0.clone(), Vec::new());
        }
        return (c1.clone(), vec![ParamFactor::Root(c0 / c1)]);
    }
    let sum = c1 / c2;
    let prod = c0 / c2;
    let disc = &(&sum * &sum) - &(&QuadExt::from_int(4) * &prod);
    let factors = match disc.to_rational() {
        Some(d) if d >= num::traits::Zero::zero() => {
            let sq = QuadExt::sqrt_of(d);
            let two = QuadExt::from_int(2);
            vec![
                ParamFactor::Root(&(&sum + &sq) / &two),
                ParamFactor::Root(&(&sum - &sq) / &two),
            ]
        }
        _ => vec![ParamFactor::Pair { sum, prod }],
    };
    (c2.clone(), factors)
}

/// Hypergeometric parameters for branch `lambda`, derived by factoring
/// the term-ratio quadratics `N(hk+h)` and `D(hk+h)` in k. The implicit
/// `(k+1)` factorial factor is split off the denominator, which is exact
/// because `lambda` solves the indicial equation.
pub fn hypergeometric_params(form: &ScheffeForm, lambda: &QuadExt) -> Result<HypergeometricRep> {
    let rec = two_term_recurrence(form, lambda);
    let h = QuadExt::from_int(form.h as i64);
    let h2 = &h * &h;
    let reindex = |c: &[QuadExt; 3]| -> [QuadExt; 3] {
        // q(hk + h) as a triple in k
        let a2 = &c[2] * &h2;
        let a1 = &(&(&QuadExt::from_int(2) * &c[2]) * &h2) + &(&c[1] * &h);
        let a0 = &(&(&c[2] * &h2) + &(&c[1] * &h)) + &c[0];
        [a0, a1, a2]
    };
    let p = reindex(&rec.num);
    let q = reindex(&rec.den);

    // split the factorial factor: q(k) = (k+1) * linear
    if !eval_quadratic(&q, -1).is_zero() {
        return Err(Error::InvalidSpec(
            "lambda is not an indicial root: denominator misses the (k+1) factor".into(),
        ));
    }
    let reduced = [&q[1] - &q[2], q[2].clone()];
    let (den_scale, lower) = if reduced[1].is_zero() {
        (reduced[0].clone(), Vec::new())
    } else {
        (
            reduced[1].clone(),
            vec![ParamFactor::Root(&reduced[0] / &reduced[1])],
        )
    };
    if den_scale.is_zero() {
        return Err(Error::InvalidSpec(
            "degenerate recurrence denominator".into(),
        ));
    }
    let (num_scale, upper) = factor_term_quadratic(&p);
    let argument_scale = -&(&num_scale / &den_scale);
    Ok(HypergeometricRep {
        upper,
        lower,
        argument_scale,
        power_h: form.h,
        lambda: lambda.clone(),
    })
}

/// The n generic solvable families for leading degree `n`: for
/// `k = 0..n-1` the equation
/// `(r^k + r^n) y'' + (r^(k-1) + r^(n-1)) y' + (r^(k-2) + r^(n-2)) y = 0`
/// with negative-exponent terms dropped, detected at `(m, h) = (2-k, n-k)`.
pub fn generic_families(n: usize) -> Vec<ScheffeTemplate> {
    assert!(n >= 2, "families require n >= 2");
    let two_term = |lo: i64, hi: i64| -> Poly {
        let mut p = Poly::zero();
        if lo >= 0 {
            p = &p + &Poly::monomial(QuadExt::one(), lo as usize);
        }
        if hi >= 0 && hi != lo {
            p = &p + &Poly::monomial(QuadExt::one(), hi as usize);
        }
        p
    };
    (0..n)
        .map(|k| {
            let ki = k as i64;
            let ni = n as i64;
            ScheffeTemplate {
                k,
                p2: two_term(ki, ni),
                p1: two_term(ki - 1, ni - 1),
                p0: two_term(ki - 2, ni - 2),
                m_shift: 2 - ki,
                h: (n - k) as u32,
            }
        })
        .collect()
}

/// Exact term-ratio identity check: the parameter form reproduces
/// `-N(hk+h)/D(hk+h)` for `k = 0..=k_max`. Used by tests and the report
/// layer as a self-check of the factoring construction.
pub fn term_ratio_identity_holds(
    rec: &TwoTermRecurrence,
    rep: &HypergeometricRep,
    k_max: i64,
) -> bool {
    let h = rec.h as i64;
    for k in 0..=k_max {
        let den = rec.d_at(h * k + h);
        if den.is_zero() {
            // both sides must terminate/misbehave together; skip the
            // resonant point (series handling reports it separately)
            continue;
        }
        let want_num = -&rec.n_at(h * k + h);
        let kq = QuadExt::from_int(k);
        let mut got_num = rep.argument_scale.clone();
        for f in &rep.upper {
            got_num = &got_num * &factor_eval(f, &kq);
        }
        let mut got_den = &kq + &QuadExt::one();
        for f in &rep.lower {
            got_den = &got_den * &factor_eval(f, &kq);
        }
        // compare -N/D with scale*prod(upper)/((k+1) prod(lower))
        if &want_num * &got_den != &got_num * &den {
            return false;
        }
    }
    true
}

fn factor_eval(f: &ParamFactor, k: &QuadExt) -> QuadExt {
    match f {
        ParamFactor::Root(a) => a + k,
        ParamFactor::Pair { sum, prod } => &(&(k * k) + &(sum * k)) + prod,
    }
}

/// Build a form from integer q entries (test and fixture helper).
pub fn form_from_ints(m_shift: i64, h: u32, q: [[i64; 2]; 3]) -> ScheffeForm {
    ScheffeForm {
        m_shift,
        h,
        q: q.map(|row| row.map(QuadExt::from_int)),
    }
}
