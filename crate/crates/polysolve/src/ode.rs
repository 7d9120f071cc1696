//! The equation model: coefficient triple of
//! `P_n y'' + Q_{n-1} y' - R_{n-2} y = 0`, classification of the origin,
//! theorem-case dispatch, and indicial roots.

use std::fmt;

use num::traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{Poly, QuadExt, Rational};

/// Coefficient data of one equation: `alpha` has length `n + 1`, `beta`
/// length `n`, `tau` length `n - 1`, and at least one of the leading
/// terms `alpha[n]`, `beta[n-1]` is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OdeSpec {
    n: usize,
    alpha: Vec<QuadExt>,
    beta: Vec<QuadExt>,
    tau: Vec<QuadExt>,
}

impl OdeSpec {
    pub fn new(alpha: Vec<QuadExt>, beta: Vec<QuadExt>, tau: Vec<QuadExt>) -> Result<Self> {
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
        Ok(OdeSpec {
            n,
            alpha,
            beta,
            tau,
        })
    }

    pub fn from_ints(alpha: &[i64], beta: &[i64], tau: &[i64]) -> Result<Self> {
        Self::new(
            alpha.iter().map(|&v| QuadExt::from_int(v)).collect(),
            beta.iter().map(|&v| QuadExt::from_int(v)).collect(),
            tau.iter().map(|&v| QuadExt::from_int(v)).collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `alpha[k]`, zero outside `0..=n`.
    pub fn alpha(&self, k: i64) -> QuadExt {
        index_or_zero(&self.alpha, k)
    }

    /// `beta[k]`, zero outside `0..=n-1`.
    pub fn beta(&self, k: i64) -> QuadExt {
        index_or_zero(&self.beta, k)
    }

    /// `tau[k]`, zero outside `0..=n-2`.
    pub fn tau(&self, k: i64) -> QuadExt {
        index_or_zero(&self.tau, k)
    }

    pub fn alphas(&self) -> &[QuadExt] {
        &self.alpha
    }

    pub fn betas(&self) -> &[QuadExt] {
        &self.beta
    }

    pub fn taus(&self) -> &[QuadExt] {
        &self.tau
    }

    /// `P_n` as a polynomial in r.
    pub fn p(&self) -> Poly {
        Poly::new(self.alpha.clone())
    }

    /// `Q_{n-1}` as a polynomial in r.
    pub fn q(&self) -> Poly {
        Poly::new(self.beta.clone())
    }

    /// `R_{n-2}` as a polynomial in r.
    pub fn r(&self) -> Poly {
        Poly::new(self.tau.clone())
    }
}

fn index_or_zero(v: &[QuadExt], k: i64) -> QuadExt {
    if k < 0 || k as usize >= v.len() {
        QuadExt::zero()
    } else {
        v[k as usize].clone()
    }
}

/// Nature of the origin r = 0 for a given spec.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SingularityClass {
    Ordinary,
    RegularSingular,
    Irregular,
}

impl fmt::Display for SingularityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SingularityClass::Ordinary => "ordinary",
            SingularityClass::RegularSingular => "regular singular",
            SingularityClass::Irregular => "irregular",
        };
        write!(f, "{s}")
    }
}

/// Which of the three constructive theorems applies.
///
/// `Case1`: `alpha0 != 0` (ordinary origin, plain power series).
/// `Case2`: `alpha0 = 0, alpha1 != 0` (regular singular, Frobenius).
/// `Case3`: `alpha0 = alpha1 = beta0 = 0, alpha2 != 0`.
/// Everything else is `Unsupported` (irregular origin).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremCase {
    Case1,
    Case2,
    Case3,
    Unsupported,
}

impl fmt::Display for TheoremCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TheoremCase::Case1 => "case 1 (alpha0 != 0)",
            TheoremCase::Case2 => "case 2 (alpha0 = 0, alpha1 != 0)",
            TheoremCase::Case3 => "case 3 (alpha0 = alpha1 = beta0 = 0, alpha2 != 0)",
            TheoremCase::Unsupported => "unsupported (irregular origin)",
        };
        write!(f, "{s}")
    }
}

/// Indicial exponents admissible at the origin, sorted ascending and
/// deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndicialRoots {
    pub roots: Vec<QuadExt>,
    pub case: TheoremCase,
}

/// Classify the origin from the zero pattern of the low-order coefficients.
pub fn classify_origin(spec: &OdeSpec) -> SingularityClass {
    match theorem_case(spec) {
        TheoremCase::Case1 => SingularityClass::Ordinary,
        TheoremCase::Case2 | TheoremCase::Case3 => SingularityClass::RegularSingular,
        TheoremCase::Unsupported => SingularityClass::Irregular,
    }
}

/// Dispatch to the applicable theorem case.
pub fn theorem_case(spec: &OdeSpec) -> TheoremCase {
    if !spec.alpha(0).is_zero() {
        return TheoremCase::Case1;
    }
    if !spec.alpha(1).is_zero() {
        return TheoremCase::Case2;
    }
    // alpha0 = alpha1 = 0: r | Q/P stays bounded only if beta0 = 0, and
    // r^2 R/P needs alpha2 != 0
    if !spec.alpha(2).is_zero() && spec.beta(0).is_zero() {
        return TheoremCase::Case3;
    }
    TheoremCase::Unsupported
}

/// Indicial exponents for the supported cases.
///
/// Case 1 has the single conventional exponent 0. Case 2 yields
/// `{0, 1 - beta0/alpha1}`. Case 3 yields the roots of
/// `alpha2 s(s-1) + beta1 s - tau0 = 0`, carried exactly in the
/// quadratic extension of the discriminant when irrational.
pub fn indicial_roots(spec: &OdeSpec) -> Result<IndicialRoots> {
    let case = theorem_case(spec);
    let mut roots = match case {
        TheoremCase::Case1 => vec![QuadExt::zero()],
        TheoremCase::Case2 => {
            let second = &QuadExt::one() - &spec.beta(0).checked_div(&spec.alpha(1))?;
            vec![QuadExt::zero(), second]
        }
        TheoremCase::Case3 => {
            let a2 = spec.alpha(2);
            let b1 = spec.beta(1);
            let t0 = spec.tau(0);
            let gap = &a2 - &b1;
            let disc = &(&gap * &gap) + &(&(&QuadExt::from_int(4) * &a2) * &t0);
            let disc_rat = disc.to_rational().ok_or(Error::UnsupportedField)?;
            if disc_rat < Rational::zero() {
                return Err(Error::NoRealIndicialRoot);
            }
            let root_disc = QuadExt::sqrt_of(disc_rat);
            let two_a2 = &QuadExt::from_int(2) * &a2;
            vec![
                (&gap + &root_disc).checked_div(&two_a2)?,
                (&gap - &root_disc).checked_div(&two_a2)?,
            ]
        }
        TheoremCase::Unsupported => {
            return Err(Error::UnsupportedEquation(
                "origin is an irregular singular point".into(),
            ))
        }
    };
    roots.sort_by(|a, b| a.partial_cmp(b).expect("indicial roots share one radicand"));
    roots.dedup();
    Ok(IndicialRoots { roots, case })
}

/// Census of the `2^(n+1) - 1` nonzero leading-coefficient patterns:
/// `(ordinary, regular singular, irregular)` counts. The three always
/// sum to `2^(n+1) - 1`.
pub fn count_classes(n: u32) -> (u64, u64, u64) {
    assert!(n >= 2, "census requires n >= 2");
    let ordinary = 1u64 << n;
    let regular = (1u64 << (n - 1)) + (1u64 << (n - 2));
    let irregular = (1u64 << (n - 2)) - 1;
    (ordinary, regular, irregular)
}

/// The indicial polynomial `s(s-1) + (beta0/alpha1) s` of case 2,
/// evaluated at `s`.
pub fn case2_indicial_value(spec: &OdeSpec, s: &QuadExt) -> QuadExt {
    let ratio = &spec.beta(0) / &spec.alpha(1);
    &(s * &(s - &QuadExt::one())) + &(&ratio * s)
}

/// The indicial polynomial `alpha2 s(s-1) + beta1 s - tau0` of case 3,
/// evaluated at `s`.
pub fn case3_indicial_value(spec: &OdeSpec, s: &QuadExt) -> QuadExt {
    let quad = &spec.alpha(2) * &(s * &(s - &QuadExt::one()));
    &(&quad + &(&spec.beta(1) * s)) - &spec.tau(0)
}
