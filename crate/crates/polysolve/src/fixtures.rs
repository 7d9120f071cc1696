//! Built-in case studies: the general Heun equation, the two-dimensional
//! Dirac radial equation in a magnetic field, the inverse-square-root
//! biconfluent equation, plus the Hermite-type and Cauchy-Euler demo
//! specs. Each builder expands the published coefficient polynomials
//! literally into an [`OdeSpec`].

use num::traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{rat_i64, QuadExt, Rational};
use crate::ode::OdeSpec;

/// Parameters of the general Heun equation
/// `(a r^3 ... ) y'' + ... = 0` in the customary naming; `a` is the
/// second finite singularity (the tabulated parameter c).
///
/// The Fuchsian constraint `epsilon = alpha + beta - gamma - delta + 1`
/// is deliberately not enforced; [`HeunParams::fuchsian`] reports it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeunParams {
    pub a: Rational,
    pub gamma: Rational,
    pub delta: Rational,
    pub epsilon: Rational,
    pub alpha: Rational,
    pub beta: Rational,
    pub q: Rational,
}

impl HeunParams {
    /// Whether the accessory parameters satisfy the Fuchsian relation.
    pub fn fuchsian(&self) -> bool {
        self.epsilon == &self.alpha + &self.beta - &self.gamma - &self.delta + rat_i64(1)
    }
}

/// The Heun equation as an n=3 spec:
/// `alpha = (0, a, -(1-a), 1)`,
/// `beta = (gamma a, -(a(delta+gamma) + epsilon + gamma), delta+epsilon+gamma)`,
/// `tau = (q, -alpha beta)`.
pub fn build_heun(p: &HeunParams) -> Result<OdeSpec> {
    let q = |r: Rational| QuadExt::from_rational(r);
    let alpha = vec![
        QuadExt::zero(),
        q(p.a.clone()),
        q(-(rat_i64(1) - &p.a)),
        QuadExt::one(),
    ];
    let beta = vec![
        q(&p.gamma * &p.a),
        q(-(&p.a * (&p.delta + &p.gamma) + &p.epsilon + &p.gamma)),
        q(&p.delta + &p.epsilon + &p.gamma),
    ];
    let tau = vec![q(p.q.clone()), q(-(&p.alpha * &p.beta))];
    OdeSpec::new(alpha, beta, tau)
}

/// Parameters of the planar Dirac problem: energy `e_level` (E), rest
/// mass `mass` (M), angular index `l`, the exponent `gamma` (supplied
/// directly, since `sqrt((l+1/2)^2 - (Z e^2)^2)` is generally
/// irrational), central charge `z`, elementary charge `e`, and field
/// strength `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiracParams {
    pub e_level: Rational,
    pub mass: Rational,
    pub l: Rational,
    pub gamma: Rational,
    pub z: Rational,
    pub e: Rational,
    pub b: Rational,
}

/// Derived quantities, recomputed on demand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiracDerived {
    pub r0: Rational,
    pub beta_coef: Rational,
    pub a: Rational,
    pub epsilon: Rational,
    pub c: Rational,
}

impl DiracParams {
    pub fn derived(&self) -> Result<DiracDerived> {
        let e_plus_m = &self.e_level + &self.mass;
        if e_plus_m.is_zero() {
            return Err(Error::InvalidSpec(
                "Dirac parameters need E + M != 0".into(),
            ));
        }
        let ze2 = &self.z * &self.e * &self.e;
        Ok(DiracDerived {
            r0: &ze2 / &e_plus_m,
            beta_coef: rat_i64(2) * &self.gamma + rat_i64(1),
            a: rat_i64(2) * &self.e_level * &ze2,
            epsilon: &self.e_level * &self.e_level
                - &self.mass * &self.mass
                - &self.e * &self.b * (&self.l + crate::exact::rat(5, 2) + &self.gamma),
            c: &self.gamma - &self.l - crate::exact::rat(1, 2),
        })
    }
}

/// The radial Dirac component equation
/// `r(r+r0) Q'' - (eB r^3 + eB r0 r^2 - (beta-1) r - beta r0) Q' +
/// ((eB+eps) r^2 + (eps r0 + a) r + c - a r0) Q = 0` as an equation spec.
///
/// The first-order polynomial has degree 3 while the leading one has
/// degree 2, so the spec is slotted at n = 4 (the smallest n with
/// `deg Q <= n-1`), with `alpha4 = 0` and `beta3 = -eB` carrying the
/// leading data. This slotting reproduces the closed-form necessary
/// condition `eps = eB(m-1)` exactly.
pub fn build_dirac(p: &DiracParams) -> Result<OdeSpec> {
    let d = p.derived()?;
    let q = QuadExt::from_rational;
    let eb = &p.e * &p.b;
    let alpha = vec![
        QuadExt::zero(),
        q(d.r0.clone()),
        QuadExt::one(),
        QuadExt::zero(),
        QuadExt::zero(),
    ];
    let beta = vec![
        q(&d.beta_coef * &d.r0),
        q(&d.beta_coef - &rat_i64(1)),
        q(-(&eb * &d.r0)),
        q(-eb.clone()),
    ];
    // R = -(the displayed zeroth-order polynomial)
    let tau = vec![
        q(&d.a * &d.r0 - &d.c),
        q(-(&d.epsilon * &d.r0 + &d.a)),
        q(-(&eb + &d.epsilon)),
    ];
    OdeSpec::new(alpha, beta, tau)
}

/// Parameters of the inverse-square-root biconfluent equation: angular
/// index `l` and the (negative) exponent-slope `lambda`; on the
/// necessary-condition branch `lambda = -sqrt(4+4l+2m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvSqrtParams {
    pub l: Rational,
    pub lambda: QuadExt,
}

impl InvSqrtParams {
    /// The NC branch value `lambda = -sqrt(4+4l+2m)` for degree m.
    pub fn on_nc_branch(l: Rational, m: usize) -> Self {
        let d = rat_i64(4) + rat_i64(4) * &l + rat_i64(2 * m as i64);
        let lambda = -&QuadExt::sqrt_of(d);
        InvSqrtParams { l, lambda }
    }
}

/// The inverse-square-root equation
/// `z f'' - (2z^2 + 2 lambda z - 3 - 4l) f'
///  + ((lambda^2 - 4(l+1)) z - (3+4l) lambda) f = 0`
/// as an n=3 spec: `alpha = (0,1,0,0)`,
/// `beta = (3+4l, -2 lambda, -2)`,
/// `tau = ((3+4l) lambda, 4(l+1) - lambda^2)`.
pub fn build_invsqrt(p: &InvSqrtParams) -> Result<OdeSpec> {
    let three_4l = QuadExt::from_rational(rat_i64(3) + rat_i64(4) * &p.l);
    let alpha = vec![
        QuadExt::zero(),
        QuadExt::one(),
        QuadExt::zero(),
        QuadExt::zero(),
    ];
    let beta = vec![
        three_4l.clone(),
        &QuadExt::from_int(-2) * &p.lambda,
        QuadExt::from_int(-2),
    ];
    let four_l1 = QuadExt::from_rational(rat_i64(4) * (&p.l + rat_i64(1)));
    let tau = vec![&three_4l * &p.lambda, &four_l1 - &(&p.lambda * &p.lambda)];
    OdeSpec::new(alpha, beta, tau)
}

/// The Hermite-type demo spec: `y'' - 2 r y' + 4 y = 0`.
pub fn hermite_spec() -> OdeSpec {
    OdeSpec::from_ints(&[1, 0, 0], &[0, -2], &[-4]).expect("valid fixture")
}

/// The Heun demo spec with integer parameters
/// `(r^3 + r^2 + r) y'' + (2r^2 + 3r + 1) y' - (2r + 2) y = 0`.
pub fn heun_demo_spec() -> OdeSpec {
    OdeSpec::from_ints(&[0, 1, 1, 1], &[1, 3, 2], &[2, 2]).expect("valid fixture")
}

/// The Cauchy-Euler demo spec `r^2 y'' - 2 y = 0` (exponents 2 and -1).
pub fn cauchy_euler_spec() -> OdeSpec {
    OdeSpec::from_ints(&[0, 0, 1], &[0, 0], &[2]).expect("valid fixture")
}
