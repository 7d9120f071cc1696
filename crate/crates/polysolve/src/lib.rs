//! Exact polynomial solutions of second-order linear ODEs with
//! polynomial coefficients.
//!
//! The library decides whether an equation
//!
//! ```text
//! P_n(r) y'' + Q_{n-1}(r) y' - R_{n-2}(r) y = 0
//! ```
//!
//! admits polynomial (or `r^s`-prefactored polynomial) solutions, builds
//! them together with the full set of necessary and sufficient existence
//! conditions, and recognizes the two-term-recurrence subclass that is
//! solvable in generalized-hypergeometric closed form. All core
//! arithmetic is exact over Q(sqrt(d)); verdicts are tolerance-free.
//!
//! Module map:
//! - [`exact`]: rationals, Q(sqrt(d)) scalars, polynomials, exact linear
//!   algebra and fraction-free determinants
//! - [`ode`]: the equation model, singularity classification at the
//!   origin, theorem-case dispatch, indicial roots
//! - [`recurrence`]: the banded coefficient system, exact solving, and
//!   condition extraction for degree-m candidates
//! - [`conditions`]: parametric condition polynomials in one unknown,
//!   tridiagonal determinants, and exact/certified root location
//! - [`scheffe`]: two-term-recurrence detection and hypergeometric
//!   closed forms
//! - [`verify`]: the independent residual-substitution oracle and
//!   floating-point series cross-checks
//! - [`job`] / [`report`] / [`fixtures`]: the document formats and
//!   built-in case studies behind the `polysolve` command-line tool

pub mod conditions;
pub mod error;
pub mod exact;
pub mod fixtures;
pub mod job;
pub mod ode;
pub mod recurrence;
pub mod report;
pub mod scheffe;
pub mod verify;

pub use error::{Error, Result};
