//! Univariate polynomials with [`QuadExt`] coefficients.
//!
//! Coefficients are stored in ascending degree. The zero polynomial is
//! the empty coefficient list, so structural equality is value equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::traits::{Signed, Zero};

use super::quadext::QuadExt;
use super::rational::{rat_i64, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<QuadExt>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<QuadExt>) -> Self {
        while coeffs.last().is_some_and(QuadExt::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: QuadExt) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(QuadExt::one())
    }

    /// `c * t^k`
    pub fn monomial(c: QuadExt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![QuadExt::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| QuadExt::from_int(c)).collect())
    }

    pub fn from_rationals(coeffs: &[Rational]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|c| QuadExt::from_rational(c.clone()))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[QuadExt] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> QuadExt {
        self.coeffs.get(k).cloned().unwrap_or_else(QuadExt::zero)
    }

    pub fn leading(&self) -> Option<&QuadExt> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &QuadExt) -> QuadExt {
        let mut acc = QuadExt::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| &QuadExt::from_int(k as i64) * c)
                .collect(),
        )
    }

    /// Multiply by `t^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![QuadExt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn scale(&self, c: &QuadExt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k).checked_add(&other.coeff(k))?);
        }
        Ok(Self::new(out))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k).checked_sub(&other.coeff(k))?);
        }
        Ok(Self::new(out))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut out = vec![QuadExt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].checked_add(&a.checked_mul(b)?)?;
            }
        }
        Ok(Self::new(out))
    }

    /// Euclidean division over the coefficient field: `(quotient, remainder)`.
    /// Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.coeffs.len();
        if self.coeffs.len() < dd {
            return (Self::zero(), self.clone());
        }
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dd + 1;
        let mut quo = vec![QuadExt::zero(); qlen];
        for k in (0..qlen).rev() {
            let factor = &rem[k + dd - 1] / &lead;
            if factor.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&factor * dc);
            }
            quo[k] = factor;
        }
        (Self::new(quo), Self::new(rem))
    }

    /// Exact division; errors if a remainder survives.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// True when every coefficient has zero radical part.
    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(QuadExt::is_rational)
    }

    pub fn to_rational_coeffs(&self) -> Option<Vec<Rational>> {
        self.coeffs.iter().map(QuadExt::to_rational).collect()
    }

    /// Scalar-normalize a condition polynomial: for rational coefficients
    /// the primitive integer form with positive leading coefficient, and
    /// the monic form otherwise. The zero polynomial is returned as-is.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        match self.to_rational_coeffs() {
            Some(coeffs) => {
                let mut denom_lcm = num::BigInt::from(1);
                for c in &coeffs {
                    denom_lcm = num::integer::lcm(denom_lcm, c.denom().clone());
                }
                let scale = Rational::from_integer(denom_lcm);
                let ints: Vec<num::BigInt> = coeffs
                    .iter()
                    .map(|c| (c * &scale).numer().clone())
                    .collect();
                let mut content = num::BigInt::zero();
                for v in &ints {
                    content = num::integer::gcd(content, v.clone());
                }
                if ints.last().unwrap().is_negative() {
                    content = -content;
                }
                Self::new(
                    ints.iter()
                        .map(|v| QuadExt::from_rational(Rational::from_integer(v / &content)))
                        .collect(),
                )
            }
            None => {
                let lead = self.leading().unwrap().clone();
                self.scale(&lead.inv())
            }
        }
    }

    /// Greatest common divisor over the coefficient field, normalized.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.normalized()
        }
    }

    /// Squarefree part `p / gcd(p, p')`, normalized.
    pub fn squarefree(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            self.normalized()
        } else {
            self.div_exact(&g).expect("gcd divides p").normalized()
        }
    }
}

fn binop_poly(a: &Poly, b: &Poly, f: fn(&Poly, &Poly) -> Result<Poly>) -> Poly {
    f(a, b).expect("mixed radicands in polynomial arithmetic")
}

macro_rules! forward_poly_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                binop_poly(self, rhs, Poly::$checked)
            }
        }
        impl $trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add, checked_add);
forward_poly_binop!(Sub, sub, checked_sub);
forward_poly_binop!(Mul, mul, checked_mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*t")?,
                _ => write!(f, "{c}*t^{k}")?,
            }
        }
        Ok(())
    }
}

/// Substitute `t = sqrt(d)` into `p`, reducing modulo `t^2 - d` to a single
/// exact value in Q(sqrt(d)). Panics if `d < 0` or if the coefficients of
/// `p` live in an incompatible extension.
pub fn reduce_quadratic_ext(p: &Poly, d: &Rational) -> QuadExt {
    assert!(!d.is_negative(), "negative radicand {d}");
    p.eval(&QuadExt::sqrt_of(d.clone()))
}

/// Largest-magnitude Cauchy root bound `1 + max|c_k / c_lead|` as a rational.
pub fn cauchy_root_bound(coeffs: &[Rational]) -> Rational {
    let lead = coeffs.last().expect("nonzero polynomial");
    let mut best = Rational::zero();
    for c in &coeffs[..coeffs.len() - 1] {
        let ratio = (c / lead).abs();
        if ratio > best {
            best = ratio;
        }
    }
    best + rat_i64(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn product_difference_of_squares() {
        let a = Poly::from_ints(&[1, 1]); // 1 + r
        let b = Poly::from_ints(&[1, -1]); // 1 - r
        assert_eq!(&a * &b, Poly::from_ints(&[1, 0, -1]));
    }

    #[test]
    fn additive_identity() {
        let z = Poly::zero();
        let sq = Poly::from_ints(&[0, 0, 1]);
        assert_eq!(&z + &sq, sq);
    }

    #[test]
    fn heun_residual_product() {
        // (2r + 2)(1 + 2r) = 2 + 6r + 4r^2
        let a = Poly::from_ints(&[2, 2]);
        let b = Poly::from_ints(&[1, 2]);
        assert_eq!(&a * &b, Poly::from_ints(&[2, 6, 4]));
    }

    #[test]
    fn derivative_cases() {
        assert_eq!(
            Poly::from_ints(&[0, 0, 0, 1]).derivative(),
            Poly::from_ints(&[0, 0, 3])
        );
        assert_eq!(Poly::from_ints(&[5]).derivative(), Poly::zero());
        assert_eq!(Poly::from_ints(&[1, 2]).derivative(), Poly::from_ints(&[2]));
    }

    #[test]
    fn reduce_examples() {
        // t^2 at d = 6 -> 6
        let p = Poly::from_ints(&[0, 0, 1]);
        assert_eq!(reduce_quadratic_ext(&p, &rat_i64(6)), QuadExt::from_int(6));
        // 15 t^2 - 6 at d = 6 -> 84
        let p = Poly::from_ints(&[-6, 0, 15]);
        assert_eq!(reduce_quadratic_ext(&p, &rat_i64(6)), QuadExt::from_int(84));
        // t at d = 4 folds to 2
        let p = Poly::from_ints(&[0, 1]);
        assert_eq!(reduce_quadratic_ext(&p, &rat_i64(4)), QuadExt::from_int(2));
    }

    #[test]
    fn division_and_gcd() {
        let p = Poly::from_ints(&[-2, 0, 1]); // t^2 - 2
        let q = Poly::from_ints(&[2, 1]); // t + 2
        let (quo, rem) = p.div_rem(&q);
        assert_eq!(quo, Poly::from_ints(&[-2, 1]));
        assert_eq!(rem, Poly::from_ints(&[2]));
        assert!(p.div_exact(&q).is_err());

        let a = &Poly::from_ints(&[-1, 1]) * &Poly::from_ints(&[3, 1]);
        let b = &Poly::from_ints(&[-1, 1]) * &Poly::from_ints(&[5, 1]);
        assert_eq!(a.gcd(&b), Poly::from_ints(&[-1, 1]));
    }

    #[test]
    fn squarefree_strips_multiplicity() {
        let lin = Poly::from_ints(&[-3, 1]);
        let p = &(&lin * &lin) * &Poly::from_ints(&[1, 1]);
        assert_eq!(p.squarefree(), &lin * &Poly::from_ints(&[1, 1]));
    }

    #[test]
    fn normalized_primitive_positive() {
        let p = Poly::from_rationals(&[rat(-4, 3), rat(0, 1), rat(-2, 3)]);
        assert_eq!(p.normalized(), Poly::from_ints(&[2, 0, 1]));
    }
}
