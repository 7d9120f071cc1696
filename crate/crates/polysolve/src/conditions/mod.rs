//! Condition polynomials in one unknown parameter t.
//!
//! A [`ParamOdeSpec`] carries the equation coefficients as polynomials in
//! t. For a target degree m the existence conditions become exact
//! polynomials in t: the sufficient ones are bordered determinants of the
//! solve block (cleared of denominators through the fraction-free
//! determinant), the necessary one is the closed-form leading-degree
//! constraint. Root location then happens exactly (rational roots) or
//! with certified Sturm intervals.

mod roots;

pub use roots::{isolate_real_roots, rational_roots, RootInterval, SturmChain};

use crate::error::{Error, Result};
use crate::exact::{det_poly_matrix, rat_i64, reduce_quadratic_ext, Poly, QuadExt, Rational};
use crate::ode::OdeSpec;

/// Equation coefficients as polynomials in the unknown t.
#[derive(Debug, Clone)]
pub struct ParamOdeSpec {
    n: usize,
    alpha: Vec<Poly>,
    beta: Vec<Poly>,
    tau: Vec<Poly>,
}

impl ParamOdeSpec {
    pub fn new(alpha: Vec<Poly>, beta: Vec<Poly>, tau: Vec<Poly>) -> Result<Self> {
        if alpha.len() < 3 {
            return Err(Error::InvalidSpec(format!(
                "alpha must have length n+1 >= 3, got {}",
                alpha.len()
            )));
        }
        let n = alpha.len() - 1;
        if beta.len() != n {
            return Err(Error::InvalidSpec(format!(
                "beta must have length n = {n}, got {}",
                beta.len()
            )));
        }
        if tau.len() != n - 1 {
            return Err(Error::InvalidSpec(format!(
                "tau must have length n-1 = {}, got {}",
                n - 1,
                tau.len()
            )));
        }
        if alpha[n].is_zero() && beta[n - 1].is_zero() {
            return Err(Error::InvalidSpec(
                "at least one of alpha[n], beta[n-1] must be nonzero".into(),
            ));
        }
        if !alpha
            .iter()
            .chain(&beta)
            .chain(&tau)
            .any(|p| p.degree() > Some(0))
        {
            return Err(Error::InvalidSpec(
                "a parametric spec needs at least one entry of positive degree in t".into(),
            ));
        }
        Ok(ParamOdeSpec {
            n,
            alpha,
            beta,
            tau,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn alpha_at(&self, k: i64) -> Poly {
        poly_index(&self.alpha, k)
    }

    fn beta_at(&self, k: i64) -> Poly {
        poly_index(&self.beta, k)
    }

    fn tau_at(&self, k: i64) -> Poly {
        poly_index(&self.tau, k)
    }

    /// Instantiate at a concrete parameter value.
    pub fn instantiate(&self, t0: &QuadExt) -> Result<OdeSpec> {
        OdeSpec::new(
            self.alpha.iter().map(|p| p.eval(t0)).collect(),
            self.beta.iter().map(|p| p.eval(t0)).collect(),
            self.tau.iter().map(|p| p.eval(t0)).collect(),
        )
    }
}

fn poly_index(v: &[Poly], k: i64) -> Poly {
    if k < 0 || k as usize >= v.len() {
        Poly::zero()
    } else {
        v[k as usize].clone()
    }
}

/// The condition polynomials for one `(m, s)` target: `sufficient` holds
/// S1..S(n-2) in row order and `necessary` the leading-degree constraint,
/// each scalar-normalized (primitive with positive leading coefficient
/// over the rationals, monic otherwise).
#[derive(Debug, Clone)]
pub struct ConditionSystem {
    pub necessary: Poly,
    pub sufficient: Vec<Poly>,
    pub m: usize,
    pub s: QuadExt,
}

/// Parametric analogue of the recurrence entry: coefficient of `C_i` in
/// the degree-l equation, as a polynomial in t.
fn param_entry(pspec: &ParamOdeSpec, s: &QuadExt, l: i64, i: i64) -> Poly {
    let is = &QuadExt::from_int(i) + s;
    let is1 = &is - &QuadExt::one();
    let a = pspec.alpha_at(l - i + 2).scale(&(&is * &is1));
    let b = pspec.beta_at(l - i + 1).scale(&is);
    &(&a + &b) - &pspec.tau_at(l - i)
}

/// Extract the conditions for a degree-m solution with exponent `s`.
///
/// Each sufficient condition is the determinant of the solve block (rows
/// `0..m-1`, columns `0..m`) bordered by the condition row, exactly the
/// determinant layout of the worked low-degree cases; the necessary
/// condition is `tau[n-2](t) - alpha[n](t) (m+s)(m+s-1) - beta[n-1](t) (m+s)`.
pub fn parametric_conditions(
    pspec: &ParamOdeSpec,
    m: usize,
    s: &QuadExt,
) -> Result<ConditionSystem> {
    let n = pspec.n;
    // the solve block must be generically invertible for the bordered
    // determinants to encode the row residuals
    if m > 0 {
        let block: Vec<Vec<Poly>> = (0..m as i64)
            .map(|l| {
                (1..=m as i64)
                    .map(|i| param_entry(pspec, s, l, i))
                    .collect()
            })
            .collect();
        if det_poly_matrix(&block)?.is_zero() {
            return Err(Error::DegenerateFamily);
        }
    }
    let bordered = |cond_row: i64| -> Result<Poly> {
        let mut rows: Vec<Vec<Poly>> = (0..m as i64)
            .map(|l| {
                (0..=m as i64)
                    .map(|i| param_entry(pspec, s, l, i))
                    .collect()
            })
            .collect();
        rows.push(
            (0..=m as i64)
                .map(|i| param_entry(pspec, s, cond_row, i))
                .collect(),
        );
        det_poly_matrix(&rows)
    };
    let mut sufficient = Vec::with_capacity(n - 2);
    for k in 0..n - 2 {
        sufficient.push(bordered((m + k) as i64)?.normalized());
    }
    let ms = &QuadExt::from_int(m as i64) + s;
    let ms1 = &ms - &QuadExt::one();
    let lead =
        &pspec.alpha_at(n as i64).scale(&(&ms * &ms1)) + &pspec.beta_at(n as i64 - 1).scale(&ms);
    let necessary = (&pspec.tau_at(n as i64 - 2) - &lead).normalized();
    Ok(ConditionSystem {
        necessary,
        sufficient,
        m,
        s: s.clone(),
    })
}

/// Generators of a tridiagonal determinant: diagonal `S_0..S_m`,
/// superdiagonal `T_1..T_m`, subdiagonal `g_1..g_m`.
#[derive(Debug, Clone)]
pub struct TridiagSpec {
    pub diag: Vec<Poly>,
    pub sup: Vec<Poly>,
    pub sub: Vec<Poly>,
}

impl TridiagSpec {
    pub fn size(&self) -> usize {
        self.diag.len()
    }

    /// The full matrix, for cross-checks against the dense determinant.
    pub fn assemble(&self) -> Vec<Vec<Poly>> {
        let n = self.size();
        let mut m = vec![vec![Poly::zero(); n]; n];
        for (j, d) in self.diag.iter().enumerate() {
            m[j][j] = d.clone();
        }
        for (j, t) in self.sup.iter().enumerate() {
            m[j][j + 1] = t.clone();
        }
        for (j, g) in self.sub.iter().enumerate() {
            m[j + 1][j] = g.clone();
        }
        m
    }
}

/// Determinant by the continuant recurrence
/// `D_k = S_{k-1} D_{k-1} - T_{k-1} g_{k-1} D_{k-2}`.
pub fn tridiagonal_determinant(tri: &TridiagSpec) -> Poly {
    let n = tri.size();
    assert!(n >= 1, "tridiagonal determinant needs size >= 1");
    assert_eq!(tri.sup.len(), n - 1, "superdiagonal length must be size-1");
    assert_eq!(tri.sub.len(), n - 1, "subdiagonal length must be size-1");
    let mut prev = Poly::one();
    let mut cur = tri.diag[0].clone();
    for k in 2..=n {
        let next = &(&tri.diag[k - 1] * &cur) - &(&(&tri.sup[k - 2] * &tri.sub[k - 2]) * &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// The non-existence determinant for the inverse-square-root equation:
/// with the necessary condition already imposed, a degree-m polynomial
/// factor exists only if this value vanishes. The entries are
/// `S_j = (2j+3+4l) sqrt(4+4l+2m)`, `T_j = j(j+2+4l)`, `g_j = 2(m-j+1)`,
/// evaluated exactly in Q(sqrt(4+4l+2m)).
pub fn invsqrt_nonexistence(l: &Rational, m: usize) -> QuadExt {
    let tri = invsqrt_tridiag(l, m);
    let delta = tridiagonal_determinant(&tri);
    let d = rat_i64(4) + rat_i64(4) * l + rat_i64(2 * m as i64);
    assert!(
        d > Rational::from_integer(0.into()),
        "radicand 4+4l+2m must be positive"
    );
    reduce_quadratic_ext(&delta, &d)
}

/// The tridiagonal generators of the inverse-square-root case, with the
/// radical left symbolic as t.
pub fn invsqrt_tridiag(l: &Rational, m: usize) -> TridiagSpec {
    let lq = QuadExt::from_rational(l.clone());
    let coef = |j: i64| -> QuadExt {
        // 2j + 3 + 4l
        &QuadExt::from_int(2 * j + 3) + &(&QuadExt::from_int(4) * &lq)
    };
    let diag = (0..=m as i64).map(|j| Poly::monomial(coef(j), 1)).collect();
    let sup = (1..=m as i64)
        .map(|j| {
            // j (j + 2 + 4l)
            let inner = &QuadExt::from_int(j + 2) + &(&QuadExt::from_int(4) * &lq);
            Poly::constant(&QuadExt::from_int(j) * &inner)
        })
        .collect();
    let sub = (1..=m as i64)
        .map(|j| Poly::constant(QuadExt::from_int(2 * (m as i64 - j + 1))))
        .collect();
    TridiagSpec { diag, sup, sub }
}

/// Where a located common root lives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootLocation {
    Exact(Rational),
    Interval { lo: Rational, hi: Rational },
}

/// One root of the necessary condition with the per-condition verdicts:
/// `conditions_hold[0]` is the necessary condition itself, the rest
/// follow S1..S(n-2).
#[derive(Debug, Clone)]
pub struct CommonRootCandidate {
    pub location: RootLocation,
    pub conditions_hold: Vec<bool>,
    pub is_common: bool,
}

/// Locate the roots of the necessary polynomial and filter them by exact
/// (or Sturm-certified) vanishing of every sufficient polynomial.
///
/// Identically-zero conditions hold everywhere; if every condition is
/// identically zero the `AllValuesAdmissible` signal is raised.
pub fn common_roots(sys: &ConditionSystem) -> Result<Vec<CommonRootCandidate>> {
    let mut polys = vec![sys.necessary.clone()];
    polys.extend(sys.sufficient.iter().cloned());
    let Some(base_idx) = polys.iter().position(|p| !p.is_zero()) else {
        return Err(Error::AllValuesAdmissible);
    };
    let base = polys[base_idx].clone();

    let mut out = Vec::new();
    let rationals = match rational_roots(&base) {
        Ok(r) => r,
        Err(Error::AllValuesAdmissible) => unreachable!("base is nonzero"),
        Err(e) => return Err(e),
    };
    for root in &rationals {
        let x = QuadExt::from_rational(root.clone());
        let holds: Vec<bool> = polys.iter().map(|p| p.eval(&x).is_zero()).collect();
        let is_common = holds.iter().all(|&b| b);
        out.push(CommonRootCandidate {
            location: RootLocation::Exact(root.clone()),
            conditions_hold: holds,
            is_common,
        });
    }

    // deflate the found rational roots, then isolate what remains
    let mut remainder = base.squarefree();
    for root in &rationals {
        let lin = Poly::new(vec![QuadExt::from_rational(-root.clone()), QuadExt::one()]);
        remainder = remainder.div_exact(&lin).expect("verified root divides");
    }
    if remainder.degree() > Some(0) {
        for iv in isolate_real_roots(&remainder)? {
            let holds: Vec<bool> = polys
                .iter()
                .map(|p| condition_holds_on_interval(p, &remainder, &iv))
                .collect();
            let is_common = holds.iter().all(|&b| b);
            out.push(CommonRootCandidate {
                location: RootLocation::Interval {
                    lo: iv.lo,
                    hi: iv.hi,
                },
                conditions_hold: holds,
                is_common,
            });
        }
    }
    out.sort_by_key(|c| location_key(&c.location));
    Ok(out)
}

fn location_key(loc: &RootLocation) -> Rational {
    match loc {
        RootLocation::Exact(r) => r.clone(),
        RootLocation::Interval { lo, .. } => lo.clone(),
    }
}

/// Certified vanishing of `p` at the single root of `base` inside `iv`:
/// exact evaluation at point intervals, otherwise a Sturm count of
/// `gcd(base, p)` over the interval (the gcd shares the root iff `p`
/// vanishes there).
fn condition_holds_on_interval(p: &Poly, base: &Poly, iv: &RootInterval) -> bool {
    if p.is_zero() {
        return true;
    }
    if iv.is_point() {
        return p.eval(&QuadExt::from_rational(iv.lo.clone())).is_zero();
    }
    let g = base.gcd(p);
    if g.degree().unwrap_or(0) == 0 {
        return false;
    }
    SturmChain::new(&g.squarefree()).count_roots(&iv.lo, &iv.hi) >= 1
}
