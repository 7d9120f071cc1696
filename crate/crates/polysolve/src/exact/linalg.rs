//! Exact linear algebra: Gaussian elimination over Q(sqrt(d)), Cramer's
//! rule, and fraction-free (Bareiss) determinants for polynomial matrices.

use super::poly::Poly;
use super::quadext::QuadExt;
use crate::error::{Error, Result};

/// Outcome of an exact affine solve `A x = rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolution {
    Unique(Vec<QuadExt>),
    /// Consistent but rank-deficient. `representative` sets every free
    /// variable to zero except the highest-index one, which is set to 1.
    Underdetermined {
        representative: Vec<QuadExt>,
        free_cols: Vec<usize>,
        rank: usize,
    },
    Inconsistent {
        rank: usize,
    },
}

/// Reduce `[a | rhs]` to reduced row echelon form in place.
/// Returns the pivot column of each pivot row.
fn rref(a: &mut [Vec<QuadExt>], rhs: &mut [QuadExt]) -> Vec<usize> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        rhs.swap(r, p);
        let inv = a[r][c].inv();
        for v in &mut a[r][c..cols] {
            *v = &*v * &inv;
        }
        rhs[r] = &rhs[r] * &inv;
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            let pivot_row = a[r][c..cols].to_vec();
            for (v, pv) in a[i][c..cols].iter_mut().zip(&pivot_row) {
                *v = &*v - &(&f * pv);
            }
            rhs[i] = &rhs[i] - &(&f * &rhs[r]);
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Exact affine solve with full rank analysis.
pub fn solve_affine(a: &[Vec<QuadExt>], rhs: &[QuadExt]) -> LinearSolution {
    assert_eq!(a.len(), rhs.len(), "row count mismatch");
    let cols = if a.is_empty() { 0 } else { a[0].len() };
    let mut m: Vec<Vec<QuadExt>> = a.to_vec();
    let mut b: Vec<QuadExt> = rhs.to_vec();
    let pivots = rref(&mut m, &mut b);
    let rank = pivots.len();
    for residual in b.iter().skip(rank) {
        if !residual.is_zero() {
            return LinearSolution::Inconsistent { rank };
        }
    }
    let free_cols: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut x = vec![QuadExt::zero(); cols];
    if let Some(&hi) = free_cols.last() {
        x[hi] = QuadExt::one();
    }
    for (row, &pc) in pivots.iter().enumerate() {
        let mut v = b[row].clone();
        for &f in &free_cols {
            if !m[row][f].is_zero() {
                v = &v - &(&m[row][f] * &x[f]);
            }
        }
        x[pc] = v;
    }
    if free_cols.is_empty() {
        LinearSolution::Unique(x)
    } else {
        LinearSolution::Underdetermined {
            representative: x,
            free_cols,
            rank,
        }
    }
}

/// Solve a square system exactly, requiring a unique solution.
pub fn solve_linear_exact(a: &[Vec<QuadExt>], rhs: &[QuadExt]) -> Result<Vec<QuadExt>> {
    let n = a.len();
    for row in a {
        assert_eq!(row.len(), n, "solve_linear_exact requires a square matrix");
    }
    match solve_affine(a, rhs) {
        LinearSolution::Unique(x) => Ok(x),
        LinearSolution::Underdetermined { rank, .. } | LinearSolution::Inconsistent { rank } => {
            Err(Error::SingularSystem { rank, size: n })
        }
    }
}

/// Determinant of a square QuadExt matrix by exact elimination.
pub fn det_quadext(a: &[Vec<QuadExt>]) -> QuadExt {
    let n = a.len();
    let mut m: Vec<Vec<QuadExt>> = a.to_vec();
    let mut det = QuadExt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return QuadExt::zero();
        };
        if p != k {
            m.swap(p, k);
            det = -det;
        }
        det = &det * &m[k][k];
        let inv = m[k][k].inv();
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = &m[i][k] * &inv;
            let pivot_row = m[k][k..n].to_vec();
            for (v, pv) in m[i][k..n].iter_mut().zip(&pivot_row) {
                *v = &*v - &(&f * pv);
            }
        }
    }
    det
}

/// Cramer's-rule solve of a square system. Demands a nonzero determinant.
pub fn solve_cramer(a: &[Vec<QuadExt>], rhs: &[QuadExt]) -> Result<Vec<QuadExt>> {
    let n = a.len();
    let det = det_quadext(a);
    if det.is_zero() {
        let rank = match solve_affine(a, rhs) {
            LinearSolution::Unique(_) => n,
            LinearSolution::Underdetermined { rank, .. }
            | LinearSolution::Inconsistent { rank } => rank,
        };
        return Err(Error::SingularSystem { rank, size: n });
    }
    let mut x = Vec::with_capacity(n);
    for col in 0..n {
        let mut ak: Vec<Vec<QuadExt>> = a.to_vec();
        for (row, item) in ak.iter_mut().enumerate() {
            item[col] = rhs[row].clone();
        }
        x.push(&det_quadext(&ak) / &det);
    }
    Ok(x)
}

/// Determinant of a square matrix of polynomials via Bareiss
/// fraction-free elimination. Every interior division is exact in the
/// polynomial ring; a surviving remainder is reported as a bug.
pub fn det_poly_matrix(m: &[Vec<Poly>]) -> Result<Poly> {
    let n = m.len();
    for row in m {
        assert_eq!(row.len(), n, "det_poly_matrix requires a square matrix");
    }
    if n == 0 {
        return Ok(Poly::one());
    }
    let mut w: Vec<Vec<Poly>> = m.to_vec();
    let mut prev = Poly::one();
    let mut negate = false;
    for k in 0..n - 1 {
        if w[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !w[i][k].is_zero()) else {
                return Ok(Poly::zero());
            };
            w.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&w[k][k] * &w[i][j]) - &(&w[i][k] * &w[k][j]);
                w[i][j] = num.div_exact(&prev)?;
            }
            w[i][k] = Poly::zero();
        }
        prev = w[k][k].clone();
    }
    let det = w[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Reference determinant by recursive cofactor expansion along the first
/// row. Exponential in the size; kept as the independent cross-check for
/// the fraction-free path.
pub fn det_poly_cofactor(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = Poly::zero();
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = entry * &det_poly_cofactor(&minor);
        det = if j % 2 == 0 {
            &det + &term
        } else {
            &det - &term
        };
    }
    det
}
