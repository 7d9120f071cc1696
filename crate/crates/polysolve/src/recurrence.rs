//! The banded coefficient system behind degree-m polynomial candidates:
//! build the (m+n-1) x (m+1) recurrence matrix for an indicial exponent
//! s, solve the leading block for C_1..C_m with C_0 = 1, and read the
//! remaining rows as sufficient conditions plus the necessary condition.
//!
//! Row `l` (for `l = 0..m+n-2`) collects the coefficient of `r^(l+s+n-2)`
//! after substituting `y = r^s (C_0 + ... + C_m r^m)`; the entry in
//! column `i` is
//!
//! ```text
//! alpha[l-i+2] (i+s)(i+s-1) + beta[l-i+1] (i+s) - tau[l-i]
//! ```
//!
//! with out-of-range alpha, beta, tau treated as zero.

use crate::error::{Error, Result};
use crate::exact::{solve_affine, solve_cramer, LinearSolution, QuadExt};
use crate::ode::{indicial_roots, theorem_case, OdeSpec, TheoremCase};

/// The assembled linear system for one `(spec, m, s)` candidate.
#[derive(Debug, Clone)]
pub struct RecurrenceMatrix {
    entries: Vec<Vec<QuadExt>>,
    s: QuadExt,
    case: TheoremCase,
    m: usize,
    spec: OdeSpec,
}

impl RecurrenceMatrix {
    pub fn rows(&self) -> usize {
        self.m + self.spec.n() - 1
    }

    pub fn cols(&self) -> usize {
        self.m + 1
    }

    pub fn entry(&self, l: usize, i: usize) -> &QuadExt {
        &self.entries[l][i]
    }

    pub fn s(&self) -> &QuadExt {
        &self.s
    }

    pub fn case(&self) -> TheoremCase {
        self.case
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn spec(&self) -> &OdeSpec {
        &self.spec
    }

    /// Residual of row `l` under a full coefficient vector.
    pub fn row_residual(&self, l: usize, coeffs: &[QuadExt]) -> QuadExt {
        let mut acc = QuadExt::zero();
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &(&self.entries[l][i] * c);
            }
        }
        acc
    }
}

/// Condition residuals read off rows `m..m+n-2`: the first `n-2` are the
/// sufficient conditions S1..S(n-2), the last row is the necessary one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub sufficient: Vec<QuadExt>,
    pub necessary: QuadExt,
}

impl ConditionReport {
    pub fn all_zero(&self) -> bool {
        self.necessary.is_zero() && self.sufficient.iter().all(QuadExt::is_zero)
    }
}

/// A degree-m candidate: solved coefficients with C_0 = 1 and the exact
/// condition residuals. `is_solution` requires every residual to vanish
/// and the leading coefficient C_m to be nonzero.
#[derive(Debug, Clone)]
pub struct PolySolutionCandidate {
    pub s: QuadExt,
    pub coeffs: Vec<QuadExt>,
    pub sufficient_residuals: Vec<QuadExt>,
    pub necessary_residual: QuadExt,
    pub is_solution: bool,
    /// Coefficient indices the solve left free (resolved by setting the
    /// highest one to 1, the rest to 0). Empty for a regular solve.
    pub free_coefficients: Vec<usize>,
}

/// One entry of a degree scan.
#[derive(Debug, Clone)]
pub struct ScanEntry {
    pub s: QuadExt,
    pub m: usize,
    pub outcome: Result<PolySolutionCandidate>,
}

fn int_plus(s: &QuadExt, k: i64) -> QuadExt {
    &QuadExt::from_int(k) + s
}

/// Coefficient of `C_i` in the degree-l equation.
fn entry_value(spec: &OdeSpec, s: &QuadExt, l: i64, i: i64) -> QuadExt {
    let is = int_plus(s, i);
    let is1 = int_plus(s, i - 1);
    let a = &spec.alpha(l - i + 2) * &(&is * &is1);
    let b = &spec.beta(l - i + 1) * &is;
    &(&a + &b) - &spec.tau(l - i)
}

/// Assemble the `(m+n-1) x (m+1)` system for indicial exponent `s`.
pub fn build_recurrence(spec: &OdeSpec, m: usize, s: &QuadExt) -> Result<RecurrenceMatrix> {
    let case = theorem_case(spec);
    if case == TheoremCase::Unsupported {
        return Err(Error::UnsupportedEquation(
            "origin is an irregular singular point".into(),
        ));
    }
    let rows = m + spec.n() - 1;
    let entries = (0..rows as i64)
        .map(|l| (0..=m as i64).map(|i| entry_value(spec, s, l, i)).collect())
        .collect();
    Ok(RecurrenceMatrix {
        entries,
        s: s.clone(),
        case,
        m,
        spec: spec.clone(),
    })
}

/// The leading m x m block (rows 0..m-1, columns 1..m) and its right-hand
/// side under C_0 = 1.
fn leading_block(mat: &RecurrenceMatrix) -> (Vec<Vec<QuadExt>>, Vec<QuadExt>) {
    let m = mat.m;
    let block: Vec<Vec<QuadExt>> = (0..m)
        .map(|l| (1..=m).map(|i| mat.entries[l][i].clone()).collect())
        .collect();
    let rhs: Vec<QuadExt> = (0..m).map(|l| -&mat.entries[l][0]).collect();
    (block, rhs)
}

fn solve_detailed(mat: &RecurrenceMatrix) -> Result<(Vec<QuadExt>, Vec<usize>)> {
    let m = mat.m;
    let mut coeffs = vec![QuadExt::one()];
    if m == 0 {
        return Ok((coeffs, Vec::new()));
    }
    let (block, rhs) = leading_block(mat);
    match solve_affine(&block, &rhs) {
        LinearSolution::Unique(x) => {
            coeffs.extend(x);
            Ok((coeffs, Vec::new()))
        }
        LinearSolution::Underdetermined {
            representative,
            free_cols,
            ..
        } => {
            coeffs.extend(representative);
            // column j of the block is coefficient C_{j+1}
            Ok((coeffs, free_cols.into_iter().map(|c| c + 1).collect()))
        }
        LinearSolution::Inconsistent { rank } => Err(Error::DegenerateSystem(format!(
            "leading {m}x{m} block is inconsistent (rank {rank})"
        ))),
    }
}

/// Solve C_1..C_m from the leading block by exact elimination; C_0 = 1.
///
/// A rank-deficient but consistent block is resolved by fixing the free
/// coefficients (highest index to 1, the rest to 0); an inconsistent
/// block is a `DegenerateSystem` error.
pub fn solve_coefficients(mat: &RecurrenceMatrix) -> Result<Vec<QuadExt>> {
    solve_detailed(mat).map(|(coeffs, _)| coeffs)
}

/// The same coefficients through Cramer's rule. Requires the leading
/// block to be nonsingular; agreement with [`solve_coefficients`] is an
/// invariant checked by the test suite.
pub fn solve_coefficients_cramer(mat: &RecurrenceMatrix) -> Result<Vec<QuadExt>> {
    let m = mat.m;
    let mut coeffs = vec![QuadExt::one()];
    if m == 0 {
        return Ok(coeffs);
    }
    let (block, rhs) = leading_block(mat);
    match solve_cramer(&block, &rhs) {
        Ok(x) => {
            coeffs.extend(x);
            Ok(coeffs)
        }
        Err(Error::SingularSystem { rank, .. }) => Err(Error::DegenerateSystem(format!(
            "leading {m}x{m} block is singular (rank {rank})"
        ))),
        Err(e) => Err(e),
    }
}

/// Residuals of the condition rows `m..m+n-2` under solved coefficients.
pub fn evaluate_conditions(mat: &RecurrenceMatrix, coeffs: &[QuadExt]) -> ConditionReport {
    assert_eq!(
        coeffs.len(),
        mat.cols(),
        "coefficient vector must have length m+1"
    );
    let n = mat.spec.n();
    let m = mat.m;
    let sufficient: Vec<QuadExt> = (m..m + n - 2)
        .map(|l| mat.row_residual(l, coeffs))
        .collect();
    let necessary = mat.row_residual(m + n - 2, coeffs);
    ConditionReport {
        sufficient,
        necessary,
    }
}

/// The necessary condition residual
/// `tau[n-2] - alpha[n] (m+s)(m+s-1) - beta[n-1] (m+s)`;
/// a degree-m solution with exponent s forces this to zero.
pub fn necessary_condition_residual(spec: &OdeSpec, m: usize, s: &QuadExt) -> QuadExt {
    let n = spec.n() as i64;
    let ms = int_plus(s, m as i64);
    let ms1 = int_plus(s, m as i64 - 1);
    let lead = &(&spec.alpha(n) * &(&ms * &ms1)) + &(&spec.beta(n - 1) * &ms);
    &spec.tau(n - 2) - &lead
}

/// Scan all indicial exponents and degrees `0..=m_max`, solving and
/// condition-checking each candidate. Entries are ordered by exponent,
/// then degree; degenerate solves are carried per entry.
pub fn find_polynomial_solutions(spec: &OdeSpec, m_max: usize) -> Result<Vec<ScanEntry>> {
    let roots = indicial_roots(spec)?;
    let mut entries = Vec::new();
    for s in &roots.roots {
        for m in 0..=m_max {
            entries.push(ScanEntry {
                s: s.clone(),
                m,
                outcome: candidate(spec, m, s),
            });
        }
    }
    Ok(entries)
}

/// Build, solve, and condition-check a single `(m, s)` candidate.
pub fn candidate(spec: &OdeSpec, m: usize, s: &QuadExt) -> Result<PolySolutionCandidate> {
    let mat = build_recurrence(spec, m, s)?;
    let (coeffs, free_coefficients) = solve_detailed(&mat)?;
    let report = evaluate_conditions(&mat, &coeffs);
    let is_solution = report.all_zero() && !coeffs[m].is_zero();
    Ok(PolySolutionCandidate {
        s: s.clone(),
        coeffs,
        sufficient_residuals: report.sufficient,
        necessary_residual: report.necessary,
        is_solution,
        free_coefficients,
    })
}
