//! Brute-force solvers by vectorization, used as an independent check on
//! the constructive solvers.
//!
//! Everything is row-major: `vec` stacks the rows of a matrix into one long
//! column, so vec(A·X·B) = (A ⊗ Bᵀ)·vec(X). The oracles build the explicit
//! coefficient system for each equation and hand it to Gaussian elimination;
//! they know nothing about group inverses, which is exactly what makes them
//! a useful referee.

use crate::error::MatError;
use crate::linalg::{solve_linear, LinearSolution};
use crate::matrix::Matrix;
use crate::scalar::Mode;

/// Kronecker product A ⊗ B: block matrix with (i,j) block a_ij·B.
pub fn kron(a: &Matrix, b: &Matrix) -> Result<Matrix, MatError> {
    if a.mode() != b.mode() {
        return Err(MatError::ModeMismatch { op: "kron" });
    }
    let rows = a.rows() * b.rows();
    let cols = a.cols() * b.cols();
    let mut out = Matrix::zeros(a.mode(), rows, cols);
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let aij = a.get(i, j);
            for k in 0..b.rows() {
                for l in 0..b.cols() {
                    out.set(i * b.rows() + k, j * b.cols() + l, aij.mul(b.get(k, l)));
                }
            }
        }
    }
    Ok(out)
}

/// Stacks the rows of M into a single column vector of length rows·cols.
pub fn vec_rows(m: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(m.mode(), m.rows() * m.cols(), 1);
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out.set(i * m.cols() + j, 0, m.get(i, j).clone());
        }
    }
    out
}

/// Inverse of `vec_rows`: reshapes a (rows·cols)×1 column back into a
/// rows×cols matrix.
pub fn unvec_rows(v: &Matrix, rows: usize, cols: usize) -> Result<Matrix, MatError> {
    if v.cols() != 1 || v.rows() != rows * cols {
        return Err(MatError::DimensionMismatch {
            op: "unvec_rows",
            detail: format!("expected {}x1 column, got {}x{}", rows * cols, v.rows(), v.cols()),
        });
    }
    let mut out = Matrix::zeros(v.mode(), rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            out.set(i, j, v.get(i * cols + j, 0).clone());
        }
    }
    Ok(out)
}

/// Outcome of a vectorized solve. `Solvable` carries one particular
/// solution; the null-space dimension of the coefficient matrix is reported
/// so callers can tell determined systems from underdetermined ones.
#[derive(Debug, Clone, PartialEq)]
pub enum OracleOutcome {
    Solvable { x: Matrix, y: Option<Matrix>, null_dim: usize },
    Unsolvable,
}

impl OracleOutcome {
    pub fn is_solvable(&self) -> bool {
        matches!(self, OracleOutcome::Solvable { .. })
    }
}

fn identity(mode: Mode, n: usize) -> Matrix {
    Matrix::identity(mode, n)
}

fn check_sylvester_dims(a: &Matrix, b: &Matrix, c: &Matrix, op: &'static str) -> Result<(), MatError> {
    if !a.is_square() {
        return Err(MatError::NonSquare { rows: a.rows(), cols: a.cols() });
    }
    if !b.is_square() {
        return Err(MatError::NonSquare { rows: b.rows(), cols: b.cols() });
    }
    if c.rows() != a.rows() || c.cols() != b.cols() {
        return Err(MatError::DimensionMismatch {
            op,
            detail: format!(
                "C must be {}x{}, got {}x{}",
                a.rows(), b.cols(), c.rows(), c.cols()
            ),
        });
    }
    if a.mode() != b.mode() || a.mode() != c.mode() {
        return Err(MatError::ModeMismatch { op });
    }
    Ok(())
}

/// Solves A·X − X·B = C by elimination on
/// (A ⊗ I − I ⊗ Bᵀ)·vec(X) = vec(C), with A m×m, B p×p, C m×p.
pub fn oracle_sylvester(a: &Matrix, b: &Matrix, c: &Matrix, tol: Option<f64>) -> Result<OracleOutcome, MatError> {
    check_sylvester_dims(a, b, c, "oracle_sylvester")?;
    let m = a.rows();
    let p = b.rows();
    let coeff = kron(a, &identity(a.mode(), p))?
        .sub(&kron(&identity(a.mode(), m), &b.transpose())?)?;
    match solve_linear(&coeff, &vec_rows(c), tol)? {
        LinearSolution::Solvable { particular, null_basis } => Ok(OracleOutcome::Solvable {
            x: unvec_rows(&particular, m, p)?,
            y: None,
            null_dim: null_basis.len(),
        }),
        LinearSolution::Infeasible => Ok(OracleOutcome::Unsolvable),
    }
}

/// Solves A·X − Y·B = C in the two unknowns X, Y by elimination on
/// [A ⊗ I | −I ⊗ Bᵀ]·[vec(X); vec(Y)] = vec(C). Here A is m×m, B p×p,
/// C m×p, and both unknowns are m×p.
pub fn oracle_two_sided(a: &Matrix, b: &Matrix, c: &Matrix, tol: Option<f64>) -> Result<OracleOutcome, MatError> {
    check_sylvester_dims(a, b, c, "oracle_two_sided")?;
    let m = a.rows();
    let p = b.rows();
    let left = kron(a, &identity(a.mode(), p))?;
    let right = kron(&identity(a.mode(), m), &b.transpose())?.neg();
    let coeff = left.hstack(&right)?;
    match solve_linear(&coeff, &vec_rows(c), tol)? {
        LinearSolution::Solvable { particular, null_basis } => {
            let x = unvec_rows(&particular.submatrix(0, m * p, 0, 1), m, p)?;
            let y = unvec_rows(&particular.submatrix(m * p, 2 * m * p, 0, 1), m, p)?;
            Ok(OracleOutcome::Solvable { x, y: Some(y), null_dim: null_basis.len() })
        }
        LinearSolution::Infeasible => Ok(OracleOutcome::Unsolvable),
    }
}

/// Solves A·Y·B − Y = C by elimination on (A ⊗ Bᵀ − I)·vec(Y) = vec(C),
/// with A m×m, B p×p, C m×p.
pub fn oracle_stein(a: &Matrix, b: &Matrix, c: &Matrix, tol: Option<f64>) -> Result<OracleOutcome, MatError> {
    check_sylvester_dims(a, b, c, "oracle_stein")?;
    let m = a.rows();
    let p = b.rows();
    let coeff = kron(a, &b.transpose())?.sub(&identity(a.mode(), m * p))?;
    match solve_linear(&coeff, &vec_rows(c), tol)? {
        LinearSolution::Solvable { particular, null_basis } => Ok(OracleOutcome::Solvable {
            x: unvec_rows(&particular, m, p)?,
            y: None,
            null_dim: null_basis.len(),
        }),
        LinearSolution::Infeasible => Ok(OracleOutcome::Unsolvable),
    }
}
