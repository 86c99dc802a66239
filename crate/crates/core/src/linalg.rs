use crate::error::MatError;
use crate::matrix::Matrix;
use crate::scalar::{Mode, Scalar, DEFAULT_FLOAT_TOL};

/// A full-rank factorization A = F·G: F has full column rank r (the pivot
/// columns of A), G has full row rank r (the nonzero rows of the reduced
/// echelon form). Rank 0 yields empty factors whose product is the zero
/// matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct RankFactorization {
    pub f: Matrix,
    pub g: Matrix,
    pub r: usize,
}

/// Outcome of an exact linear solve: a particular solution plus a null-space
/// basis, or a certified inconsistency.
#[derive(Debug, Clone, PartialEq)]
pub enum LinearSolution {
    Solvable {
        particular: Matrix,
        null_basis: Vec<Matrix>,
    },
    Infeasible,
}

/// Reduced row echelon form with the list of pivot columns.
///
/// Rational mode picks the first nonzero entry in each column — exact, no
/// growth concerns thanks to reduced fractions. Float mode does partial
/// pivoting and accepts a pivot only above `tol * max_abs(input)` (relative
/// threshold, default 1e-9).
pub(crate) fn rref(a: &Matrix, tol: Option<f64>) -> (Matrix, Vec<usize>) {
    let mut m = a.clone();
    let (rows, cols) = (m.rows(), m.cols());
    let float_cut = match m.mode() {
        Mode::Rational => 0.0,
        Mode::Float => {
            let scale = a.max_abs();
            if scale == 0.0 {
                f64::INFINITY // all-zero float matrix: accept no pivots
            } else {
                tol.unwrap_or(DEFAULT_FLOAT_TOL) * scale
            }
        }
    };
    let mut pivots = Vec::new();
    let mut pr = 0; // next pivot row
    for pc in 0..cols {
        if pr == rows {
            break;
        }
        // pick the pivot row for column pc
        let pivot_row = match m.mode() {
            Mode::Rational => (pr..rows).find(|&i| !m.get(i, pc).is_zero_with(None)),
            Mode::Float => {
                let (mut best, mut best_abs) = (None, float_cut);
                for i in pr..rows {
                    let v = m.get(i, pc).abs_f64();
                    if v > best_abs {
                        best = Some(i);
                        best_abs = v;
                    }
                }
                best
            }
        };
        let Some(pivot_row) = pivot_row else { continue };
        // swap into position
        if pivot_row != pr {
            for j in 0..cols {
                let a = m.get(pr, j).clone();
                let b = m.get(pivot_row, j).clone();
                m.set(pr, j, b);
                m.set(pivot_row, j, a);
            }
        }
        // normalize the pivot row
        let inv = Scalar::one(m.mode()).div(m.get(pr, pc));
        for j in 0..cols {
            let v = m.get(pr, j).mul(&inv);
            m.set(pr, j, v);
        }
        // eliminate everywhere else
        for i in 0..rows {
            if i == pr {
                continue;
            }
            let factor = m.get(i, pc).clone();
            if factor.is_zero_with(Some(0.0)) {
                continue;
            }
            for j in 0..cols {
                let v = m.get(i, j).sub(&factor.mul(m.get(pr, j)));
                m.set(i, j, v);
            }
            m.set(i, pc, Scalar::zero(m.mode()));
        }
        pivots.push(pc);
        pr += 1;
    }
    (m, pivots)
}

/// Rank of a matrix: exact in Rational mode, tolerance-based in Float mode.
pub fn rank(a: &Matrix, tol: Option<f64>) -> usize {
    rref(a, tol).1.len()
}

/// Full-rank factorization A = F·G. Never fails: any matrix (including
/// zero and empty ones) factors, with r = 0 producing empty F, G.
pub fn rank_factorize(a: &Matrix, tol: Option<f64>) -> RankFactorization {
    let (reduced, pivots) = rref(a, tol);
    let r = pivots.len();
    let mut f = Matrix::zeros(a.mode(), a.rows(), r);
    for (k, &pc) in pivots.iter().enumerate() {
        for i in 0..a.rows() {
            f.set(i, k, a.get(i, pc).clone());
        }
    }
    let g = reduced.submatrix(0, r, 0, a.cols());
    RankFactorization { f, g, r }
}

/// Exact inverse, or `None` when singular. Errors on non-square input.
/// The 0x0 matrix is its own inverse (empty product convention).
pub fn inverse(a: &Matrix, tol: Option<f64>) -> Result<Option<Matrix>, MatError> {
    if !a.is_square() {
        return Err(MatError::NonSquare { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    let aug = a.hstack(&Matrix::identity(a.mode(), n))?;
    let (reduced, pivots) = rref(&aug, tol);
    if pivots.len() < n || pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) {
        return Ok(None);
    }
    Ok(Some(reduced.submatrix(0, n, n, 2 * n)))
}

/// Solves A·x = b for a column b. Returns a particular solution (free
/// variables set to zero) and a null-space basis, or `Infeasible` — decided
/// by an inconsistent row after elimination, which in Rational mode is an
/// exact certificate.
pub fn solve_linear(a: &Matrix, b: &Matrix, tol: Option<f64>) -> Result<LinearSolution, MatError> {
    if a.mode() != b.mode() {
        return Err(MatError::ModeMismatch { op: "solve_linear" });
    }
    if b.cols() != 1 || a.rows() != b.rows() {
        return Err(MatError::DimensionMismatch {
            op: "solve_linear",
            detail: format!("A is {}x{}, b is {}x{}", a.rows(), a.cols(), b.rows(), b.cols()),
        });
    }
    let n = a.cols();
    let aug = a.hstack(b)?;
    let (reduced, pivots) = rref(&aug, tol);
    if pivots.last() == Some(&n) {
        return Ok(LinearSolution::Infeasible);
    }
    let mut particular = Matrix::zeros(a.mode(), n, 1);
    for (row, &pc) in pivots.iter().enumerate() {
        particular.set(pc, 0, reduced.get(row, n).clone());
    }
    let pivot_set: Vec<bool> = {
        let mut s = vec![false; n];
        for &p in &pivots {
            s[p] = true;
        }
        s
    };
    let mut null_basis = Vec::new();
    for free in 0..n {
        if pivot_set[free] {
            continue;
        }
        let mut v = Matrix::zeros(a.mode(), n, 1);
        v.set(free, 0, Scalar::one(a.mode()));
        for (row, &pc) in pivots.iter().enumerate() {
            v.set(pc, 0, reduced.get(row, free).neg());
        }
        null_basis.push(v);
    }
    Ok(LinearSolution::Solvable { particular, null_basis })
}
