//! Independent correctness oracle.
//!
//! [`residual_polynomial`] substitutes `y = r^s (C_0 + ... + C_m r^m)`
//! into the equation by direct double-sum expansion and returns the
//! bracket polynomial `B` with `P y'' + Q y' - R y = r^(s-2) B(r)`. It
//! shares no code with the recurrence engine's matrix path, so agreement
//! between the two is a real check. The floating-point helpers cross-check
//! hypergeometric closed forms against exact series at partial-sum level.

use crate::error::{Error, Result};
use crate::exact::{Poly, QuadExt};
use crate::ode::OdeSpec;
use crate::recurrence::PolySolutionCandidate;
use crate::scheffe::{HypergeometricRep, ParamFactor, TwoTermRecurrence};

/// The expanded residual bracket and its exact zero verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualReport {
    pub residual: Poly,
    pub is_zero: bool,
}

/// Expand `P y'' + Q y' - R y` for `y = r^s sum C_i r^i` into the bracket
/// polynomial `B(r)` (the overall factor `r^(s-2)` removed).
///
/// For a non-integer (or negative) exponent `s` the expansion is a valid
/// formal statement only at a singular origin; a spec with `alpha[0] != 0`
/// is rejected in that situation.
pub fn residual_polynomial(
    spec: &OdeSpec,
    s: &QuadExt,
    coeffs: &[QuadExt],
) -> Result<ResidualReport> {
    let integer_s = s
        .to_rational()
        .is_some_and(|r| r.is_integer() && r >= num::traits::Zero::zero());
    if !integer_s && !spec.alpha(0).is_zero() {
        return Err(Error::InvalidExponent(format!(
            "exponent s = {s} at an ordinary origin leaves r^(s-2) singular"
        )));
    }
    let n = spec.n();
    let m = coeffs.len().saturating_sub(1);
    // powers r^(k+i) from P y'', r^(k+i+1) from Q y', r^(k+i+2) from R y
    let mut acc = vec![QuadExt::zero(); n + m + 1];
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let is = &QuadExt::from_int(i as i64) + s;
        let is1 = &is - &QuadExt::one();
        let fall2 = &is * &is1;
        for k in 0..=n {
            let a = spec.alpha(k as i64);
            if !a.is_zero() {
                acc[k + i] = &acc[k + i] + &(&(&a * c) * &fall2);
            }
        }
        for k in 0..n {
            let b = spec.beta(k as i64);
            if !b.is_zero() {
                acc[k + i + 1] = &acc[k + i + 1] + &(&(&b * c) * &is);
            }
        }
        for k in 0..n - 1 {
            let t = spec.tau(k as i64);
            if !t.is_zero() {
                acc[k + i + 2] = &acc[k + i + 2] - &(&t * c);
            }
        }
    }
    let residual = Poly::new(acc);
    let is_zero = residual.is_zero();
    Ok(ResidualReport { residual, is_zero })
}

/// Final verdict on an engine candidate: the candidate must claim to be a
/// solution and the independent residual must vanish identically.
pub fn verify_candidate(spec: &OdeSpec, cand: &PolySolutionCandidate) -> bool {
    if !cand.is_solution {
        return false;
    }
    if cand.coeffs.last().is_none_or(QuadExt::is_zero) {
        return false;
    }
    residual_polynomial(spec, &cand.s, &cand.coeffs)
        .map(|r| r.is_zero)
        .unwrap_or(false)
}

/// Floating-point agreement at relative tolerance 1e-12 with an absolute
/// floor of 1e-14 (the convention for every float cross-check here).
pub fn floats_agree(a: f64, b: f64) -> bool {
    let diff = (a - b).abs();
    diff <= 1e-14 || diff <= 1e-12 * a.abs().max(b.abs())
}

fn factor_value(factor: &ParamFactor, k: f64) -> f64 {
    match factor {
        ParamFactor::Root(a) => a.to_f64() + k,
        ParamFactor::Pair { sum, prod } => k * k + sum.to_f64() * k + prod.to_f64(),
    }
}

/// Partial sum of the generalized hypergeometric series described by
/// `rep`, evaluated at `x` in double precision (the `r^lambda` prefactor
/// is not included). Terms follow the exact term-ratio recurrence
/// `T_{k+1}/T_k = prod(upper)/(prod(lower) (k+1)) * scale * x^h`.
pub fn hypergeometric_partial_sum(rep: &HypergeometricRep, x: f64, terms: usize) -> Result<f64> {
    assert!(terms >= 1, "at least one term required");
    let arg = rep.argument_scale.to_f64() * x.powi(rep.power_h as i32);
    let mut term = 1.0_f64;
    let mut sum = 1.0_f64;
    for k in 0..terms.saturating_sub(1) {
        let kf = k as f64;
        let mut num = 1.0;
        for f in &rep.upper {
            num *= factor_value(f, kf);
        }
        if num == 0.0 || term == 0.0 {
            // series terminated
            return Ok(sum);
        }
        let mut den = kf + 1.0;
        for f in &rep.lower {
            den *= factor_value(f, kf);
        }
        if den == 0.0 {
            return Err(Error::PoleInParameters { k: k + 1 });
        }
        term *= num / den * arg;
        sum += term;
    }
    Ok(sum)
}

/// Maximum absolute deviation between the partial sums of the exact
/// two-term-recurrence series and of the hypergeometric form, both with
/// the `x^lambda` prefactor applied, over the first `terms` grid terms.
pub fn compare_series(
    rec: &TwoTermRecurrence,
    rep: &HypergeometricRep,
    x: f64,
    terms: usize,
) -> Result<f64> {
    assert!(terms >= 1, "at least one term required");
    let h = rec.h as usize;
    let coeffs = crate::scheffe::series_coefficients(rec, h * terms.saturating_sub(1))?;
    let lambda = rec.lambda.to_f64();
    let prefactor = x.powf(lambda);

    let arg = rep.argument_scale.to_f64() * x.powi(rep.power_h as i32);
    let mut hyp_term = 1.0_f64;
    let mut hyp_sum = 0.0_f64;
    let mut exact_sum = 0.0_f64;
    let mut deviation = 0.0_f64;
    let mut terminated = false;
    for k in 0..terms {
        if k > 0 {
            let kf = (k - 1) as f64;
            let mut num = 1.0;
            for f in &rep.upper {
                num *= factor_value(f, kf);
            }
            if num == 0.0 || hyp_term == 0.0 {
                terminated = true;
            }
            if !terminated {
                let mut den = kf + 1.0;
                for f in &rep.lower {
                    den *= factor_value(f, kf);
                }
                if den == 0.0 {
                    return Err(Error::PoleInParameters { k });
                }
                hyp_term *= num / den * arg;
            } else {
                hyp_term = 0.0;
            }
        }
        hyp_sum += hyp_term;
        exact_sum += coeffs[h * k].to_f64() * x.powi((h * k) as i32);
        let delta = (prefactor * hyp_sum - prefactor * exact_sum).abs();
        if delta > deviation {
            deviation = delta;
        }
    }
    Ok(deviation)
}
