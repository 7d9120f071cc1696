//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the exact arithmetic core and the solver layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two values live in different quadratic extensions Q(sqrt(d)).
    #[error("mismatched radicands: sqrt({0}) and sqrt({1}) cannot be combined")]
    MismatchedRadicands(String, String),

    /// A linear system has no unique solution; carries the rank found.
    #[error("singular linear system (rank {rank} of {size})")]
    SingularSystem { rank: usize, size: usize },

    /// Fraction-free elimination required a division that left a remainder.
    /// This indicates a bug in the caller or in the elimination itself.
    #[error("inexact polynomial division during fraction-free elimination")]
    InexactDivision,

    /// The indicial equation has no real root.
    #[error("indicial equation has negative discriminant: no real indicial root")]
    NoRealIndicialRoot,

    /// An indicial root would need a radical tower beyond one sqrt(d).
    #[error("indicial root lies outside a single quadratic extension")]
    UnsupportedField,

    /// The equation falls outside the three supported theorem cases
    /// (its origin is an irregular singular point).
    #[error("unsupported equation class: {0}")]
    UnsupportedEquation(String),

    /// The coefficient subsystem is inconsistent for this (s, m) pair.
    #[error("degenerate coefficient system: {0}")]
    DegenerateSystem(String),

    /// A parametric family whose coefficient subsystem is singular for
    /// every value of the unknown.
    #[error("degenerate family: coefficient subsystem is identically singular in t")]
    DegenerateFamily,

    /// A condition polynomial vanishes identically, so every parameter
    /// value is admissible; root listing is meaningless.
    #[error("polynomial is identically zero: all parameter values admissible")]
    AllValuesAdmissible,

    /// Two-term recurrence hit an index where the denominator vanishes
    /// but the numerator does not (logarithmic case, unsupported).
    #[error("resonant index k = {k}: recurrence denominator vanishes")]
    ResonantIndex { k: i64 },

    /// A lower hypergeometric parameter hit a nonpositive integer before
    /// the series terminated.
    #[error("lower hypergeometric parameter hit a pole at term {k}")]
    PoleInParameters { k: usize },

    /// Residual expansion produced surviving negative powers of r.
    #[error("invalid exponent: {0}")]
    InvalidExponent(String),

    /// Malformed equation data (wrong lengths, zero leading block, ...).
    #[error("invalid equation spec: {0}")]
    InvalidSpec(String),

    /// Malformed job document.
    #[error("job parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
