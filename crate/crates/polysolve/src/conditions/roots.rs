//! Exact root location for univariate rational-coefficient polynomials:
//! rational roots by the rational-root theorem, real roots by
//! Sturm-sequence isolation with rational bisection.

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{cauchy_root_bound, rat_i64, Poly, QuadExt, Rational};

/// One isolated real root: either an exact point or an open-below
/// interval `(lo, hi]` containing exactly one root of the squarefree part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RootInterval {
    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }
}

fn rational_coeffs(p: &Poly) -> Result<Vec<Rational>> {
    p.to_rational_coeffs()
        .ok_or_else(|| Error::InvalidSpec("polynomial must have rational coefficients".into()))
}

/// Divisors of `|n|` by trial division. Complete whenever every prime
/// factor fits under the trial bound (with at most one larger cofactor),
/// which covers the coefficient sizes this crate produces; every candidate
/// root is verified by exact evaluation regardless.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut remaining = n.abs();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let push = |p: BigInt, factors: &mut Vec<(BigInt, u32)>| {
        if let Some(last) = factors.last_mut() {
            if last.0 == p {
                last.1 += 1;
                return;
            }
        }
        factors.push((p, 1));
    };
    let mut p = BigInt::from(2);
    let bound = BigInt::from(1_000_000u32);
    while &p * &p <= remaining && p <= bound {
        while (&remaining % &p).is_zero() {
            remaining /= &p;
            push(p.clone(), &mut factors);
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    if remaining > BigInt::one() {
        push(remaining, &mut factors);
    }
    let mut divs = vec![BigInt::one()];
    for (prime, mult) in factors {
        let base = divs.clone();
        let mut power = BigInt::one();
        for _ in 0..mult {
            power = &power * &prime;
            divs.extend(base.iter().map(|d| d * &power));
        }
    }
    divs.sort();
    divs.dedup();
    divs
}

/// All rational roots of `p`, each verified by exact evaluation.
/// The zero polynomial is the `AllValuesAdmissible` signal.
pub fn rational_roots(p: &Poly) -> Result<Vec<Rational>> {
    if p.is_zero() {
        return Err(Error::AllValuesAdmissible);
    }
    let coeffs = rational_coeffs(p)?;
    // clear denominators to a primitive integer polynomial
    let mut lcm = BigInt::one();
    for c in &coeffs {
        lcm = num::integer::lcm(lcm, c.denom().clone());
    }
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).numer().clone())
        .collect();

    let mut roots = Vec::new();
    let Some(low) = ints.iter().position(|c| !c.is_zero()) else {
        return Err(Error::AllValuesAdmissible);
    };
    if low > 0 {
        roots.push(Rational::zero());
    }
    let trailing = &ints[low];
    let leading = ints.last().expect("nonzero polynomial");
    for num_d in divisors(trailing) {
        for den_d in divisors(leading) {
            let candidate = Rational::new(num_d.clone(), den_d.clone());
            for cand in [candidate.clone(), -candidate] {
                let v = p.eval(&QuadExt::from_rational(cand.clone()));
                if v.is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

/// Sturm chain of a squarefree polynomial.
pub struct SturmChain {
    chain: Vec<Poly>,
}

impl SturmChain {
    pub fn new(squarefree: &Poly) -> Self {
        let mut chain = vec![squarefree.clone(), squarefree.derivative()];
        loop {
            let len = chain.len();
            if chain[len - 1].is_zero() {
                chain.pop();
                break;
            }
            let (_, rem) = chain[len - 2].div_rem(&chain[len - 1]);
            chain.push(-rem);
        }
        SturmChain { chain }
    }

    fn variations_at(&self, x: &Rational) -> usize {
        let xq = QuadExt::from_rational(x.clone());
        let mut last = 0i32;
        let mut count = 0;
        for p in &self.chain {
            let s = p.eval(&xq).signum();
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn count_roots(&self, lo: &Rational, hi: &Rational) -> usize {
        self.variations_at(lo)
            .saturating_sub(self.variations_at(hi))
    }
}

/// Isolate every real root of `p` in disjoint intervals, each refined to
/// width at most `2^-30` of the initial Cauchy bound (exact roots hit by
/// a bisection midpoint come back as point intervals).
pub fn isolate_real_roots(p: &Poly) -> Result<Vec<RootInterval>> {
    if p.is_zero() {
        return Err(Error::AllValuesAdmissible);
    }
    let sf = p.squarefree();
    if sf.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let coeffs = rational_coeffs(&sf)?;
    let bound = cauchy_root_bound(&coeffs);
    let chain = SturmChain::new(&sf);
    let width_goal = &bound / rat_i64(1 << 30);

    let mut out = Vec::new();
    let mut stack = vec![(-&bound, bound.clone())];
    while let Some((lo, hi)) = stack.pop() {
        // a root sitting exactly on hi was already reported by the split
        // that discovered it (the Cauchy bound itself is never a root),
        // so the half-open Sturm count must not see it again; keep
        // splitting such intervals until the endpoint root separates
        let hi_is_root = sf.eval(&QuadExt::from_rational(hi.clone())).is_zero();
        let mut count = chain.count_roots(&lo, &hi);
        if hi_is_root {
            count -= 1;
        }
        if count == 0 {
            continue;
        }
        if count == 1 && !hi_is_root {
            out.push(refine(&sf, &chain, lo, hi, &width_goal));
            continue;
        }
        let mid = (&lo + &hi) / rat_i64(2);
        if sf.eval(&QuadExt::from_rational(mid.clone())).is_zero() {
            out.push(RootInterval {
                lo: mid.clone(),
                hi: mid.clone(),
            });
        }
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(out)
}

fn refine(
    sf: &Poly,
    chain: &SturmChain,
    mut lo: Rational,
    mut hi: Rational,
    width_goal: &Rational,
) -> RootInterval {
    // callers guarantee the single root is interior, never at hi
    while &(&hi - &lo) > width_goal {
        let mid = (&lo + &hi) / rat_i64(2);
        if sf.eval(&QuadExt::from_rational(mid.clone())).is_zero() {
            return RootInterval {
                lo: mid.clone(),
                hi: mid,
            };
        }
        if chain.count_roots(&lo, &mid) >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    RootInterval { lo, hi }
}
