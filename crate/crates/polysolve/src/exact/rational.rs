//! Arbitrary-precision rational scalars and small helpers on them.
//!
//! [`Rational`] is `num::BigRational`: always normalized (gcd of numerator
//! and denominator is 1, denominator positive, zero is 0/1), which is
//! exactly the invariant the rest of the crate relies on.

use num::bigint::BigInt;
use num::traits::{Signed, Zero};

pub type Rational = num::BigRational;

/// Rational from an integer.
pub fn rat_i64(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational from a numerator/denominator pair. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact square root of a non-negative rational, if it is a perfect square.
///
/// For `p/q` in lowest terms this holds iff both `p` and `q` are perfect
/// integer squares.
pub fn exact_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    if r.is_zero() {
        return Some(Rational::zero());
    }
    let ns = r.numer().sqrt();
    let ds = r.denom().sqrt();
    if &(&ns * &ns) == r.numer() && &(&ds * &ds) == r.denom() {
        Some(Rational::new(ns, ds))
    } else {
        None
    }
}

/// Parse an exact rational literal `p`, `-p`, or `p/q`. No float round-trip.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let t = text.trim();
    if t.is_empty() {
        return None;
    }
    t.parse::<Rational>().ok().filter(|_| {
        // reject literals the stdlib parser would accept but we do not
        // document, e.g. embedded whitespace handled above
        !t.contains(char::is_whitespace)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_is_canonical() {
        let a = rat(6, -4);
        assert_eq!(a.numer(), &BigInt::from(-3));
        assert_eq!(a.denom(), &BigInt::from(2));
        let z = rat(0, 7);
        assert!(z.is_zero());
        assert_eq!(z.denom(), &BigInt::from(1));
    }

    #[test]
    fn exact_sqrt_detects_squares() {
        assert_eq!(exact_sqrt(&rat(4, 9)), Some(rat(2, 3)));
        assert_eq!(exact_sqrt(&rat_i64(4)), Some(rat_i64(2)));
        assert_eq!(exact_sqrt(&rat_i64(6)), None);
        assert_eq!(exact_sqrt(&rat(1, 2)), None);
        assert_eq!(exact_sqrt(&rat_i64(-4)), None);
        assert_eq!(exact_sqrt(&Rational::zero()), Some(Rational::zero()));
    }

    #[test]
    fn parse_is_exact() {
        let third = parse_rational("1/3").unwrap();
        assert_eq!(third, rat(1, 3));
        assert_eq!(parse_rational("-7/2"), Some(rat(-7, 2)));
        assert_eq!(parse_rational("5"), Some(rat_i64(5)));
        assert_eq!(parse_rational("1.5"), None);
        assert_eq!(parse_rational(""), None);
        assert_eq!(parse_rational("1 / 3"), None);
    }
}
