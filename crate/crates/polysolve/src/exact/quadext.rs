//! Exact scalars in a quadratic extension Q(sqrt(d)).
//!
//! A [`QuadExt`] is `a + b*sqrt(d)` with rational `a`, `b`, `d >= 0`.
//! Canonical form: if `b == 0` the radicand is dropped (`d = 0`); if `d`
//! is the square of a rational `q` the value folds to `a + b*q`. Two
//! values with nonzero radical parts combine only when their radicands
//! agree up to a rational square (e.g. sqrt(24) = 2*sqrt(6)); anything
//! else is a hard error, since the crate works in one Q(sqrt(d)) per
//! computation context.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{exact_sqrt, rat_i64, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    d: Rational,
}

impl QuadExt {
    /// Build `a + b*sqrt(d)` in canonical form. Panics if `d < 0` while
    /// the radical part is nonzero.
    pub fn new(a: Rational, b: Rational, d: Rational) -> Self {
        if b.is_zero() {
            return QuadExt {
                a,
                b,
                d: Rational::zero(),
            };
        }
        assert!(!d.is_negative(), "negative radicand {d} in QuadExt");
        if let Some(q) = exact_sqrt(&d) {
            return QuadExt {
                a: a + b * q,
                b: Rational::zero(),
                d: Rational::zero(),
            };
        }
        QuadExt { a, b, d }
    }

    pub fn from_rational(a: Rational) -> Self {
        QuadExt {
            a,
            b: Rational::zero(),
            d: Rational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat_i64(n))
    }

    /// `sqrt(d)` as an exact value (folds to a rational when d is square).
    pub fn sqrt_of(d: Rational) -> Self {
        Self::new(Rational::zero(), Rational::one(), d)
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn radical_part(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> &Rational {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The rational value, if the radical part vanishes.
    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.a.clone())
    }

    /// Rewrite `other` (if needed) so both operands share one radicand.
    /// Returns the operands' components over the common radicand.
    fn align(&self, other: &Self) -> Result<(Rational, Rational, Rational, Rational, Rational)> {
        if self.b.is_zero() {
            return Ok((
                self.a.clone(),
                Rational::zero(),
                other.a.clone(),
                other.b.clone(),
                other.d.clone(),
            ));
        }
        if other.b.is_zero() {
            return Ok((
                self.a.clone(),
                self.b.clone(),
                other.a.clone(),
                Rational::zero(),
                self.d.clone(),
            ));
        }
        if self.d == other.d {
            return Ok((
                self.a.clone(),
                self.b.clone(),
                other.a.clone(),
                other.b.clone(),
                self.d.clone(),
            ));
        }
        // sqrt(d1) = t*sqrt(d2) when d1/d2 = t^2; keep the smaller radicand
        let (lo, hi) = if self.d < other.d {
            (self, other)
        } else {
            (other, self)
        };
        match exact_sqrt(&(&hi.d / &lo.d)) {
            Some(t) => {
                let hi_b = &hi.b * t;
                if std::ptr::eq(lo, self) {
                    Ok((
                        self.a.clone(),
                        self.b.clone(),
                        hi.a.clone(),
                        hi_b,
                        lo.d.clone(),
                    ))
                } else {
                    Ok((
                        hi.a.clone(),
                        hi_b,
                        other.a.clone(),
                        other.b.clone(),
                        lo.d.clone(),
                    ))
                }
            }
            None => Err(Error::MismatchedRadicands(
                self.d.to_string(),
                other.d.to_string(),
            )),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let (a1, b1, a2, b2, d) = self.align(other)?;
        Ok(Self::new(a1 + a2, b1 + b2, d))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let (a1, b1, a2, b2, d) = self.align(other)?;
        Ok(Self::new(a1 - a2, b1 - b2, d))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let (a1, b1, a2, b2, d) = self.align(other)?;
        // (a1 + b1 r)(a2 + b2 r) = a1 a2 + b1 b2 d + (a1 b2 + a2 b1) r
        let a = &a1 * &a2 + &b1 * &b2 * &d;
        let b = a1 * b2 + a2 * b1;
        Ok(Self::new(a, b, d))
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero QuadExt");
        // 1/(a + b r) = (a - b r)/(a^2 - b^2 d); the norm a^2 - b^2 d is
        // nonzero because d is not a rational square in canonical form
        let norm = &self.a * &self.a - &self.b * &self.b * &self.d;
        Self::new(&self.a / &norm, -&self.b / &norm, self.d.clone())
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.checked_mul(&other.inv())
    }

    /// Exact sign: -1, 0, or 1.
    pub fn signum(&self) -> i32 {
        let sa = sign(&self.a);
        let sb = sign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        // opposite signs: compare a^2 against b^2 d
        let gap = &self.a * &self.a - &self.b * &self.b * &self.d;
        sa * sign(&gap)
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// True when this value can be combined with values over radicand `d`
    /// (rational, same radicand, or radicands differing by a rational square).
    pub fn radicand_compatible(&self, d: &Rational) -> bool {
        if self.b.is_zero() || &self.d == d || d.is_zero() {
            return true;
        }
        let (lo, hi) = if &self.d < d {
            (self.d.clone(), d.clone())
        } else {
            (d.clone(), self.d.clone())
        };
        exact_sqrt(&(hi / lo)).is_some()
    }

    /// Approximate numeric value (for bounds and float cross-checks only).
    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        if self.b.is_zero() {
            return a;
        }
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        let d = self.d.to_f64().unwrap_or(f64::NAN);
        a + b * d.sqrt()
    }
}

fn sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &Self) -> bool {
        match self.align(other) {
            Ok((a1, b1, a2, b2, _)) => a1 == a2 && b1 == b2,
            Err(_) => false,
        }
    }
}

impl Eq for QuadExt {}

impl PartialOrd for QuadExt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.align(other).is_err() {
            return None;
        }
        let diff = self.checked_sub(other).ok()?;
        Some(match diff.signum() {
            0 => Ordering::Equal,
            s if s < 0 => Ordering::Less,
            _ => Ordering::Greater,
        })
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "({}, {}, {})", self.a, self.b, self.d)
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &QuadExt) -> QuadExt {
                self.$checked(rhs)
                    .expect("mixed radicands in QuadExt arithmetic")
            }
        }
        impl $trait for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::new(-&self.a, -&self.b, self.d.clone())
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -&self
    }
}
