use crate::error::MatError;
use crate::scalar::{Mode, Scalar};
use std::fmt;

/// Dense row-major matrix with a single arithmetic mode for all entries.
///
/// Values are immutable after construction: every operation returns a new
/// matrix. Zero-dimensional matrices (0 rows and/or 0 columns) are legal and
/// arise naturally from rank-0 factorizations; a product over an empty inner
/// dimension is the zero matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    mode: Mode,
    data: Vec<Scalar>,
}

impl Matrix {
    /// Builds a matrix from row-major scalars, rejecting mixed modes and
    /// length mismatches.
    pub fn from_scalars(
        mode: Mode,
        rows: usize,
        cols: usize,
        data: Vec<Scalar>,
    ) -> Result<Matrix, MatError> {
        if data.len() != rows * cols {
            return Err(MatError::DimensionMismatch {
                op: "from_scalars",
                detail: format!("{} entries for a {}x{} matrix", data.len(), rows, cols),
            });
        }
        if data.iter().any(|s| s.mode() != mode) {
            return Err(MatError::ModeMismatch { op: "from_scalars" });
        }
        Ok(Matrix { rows, cols, mode, data })
    }

    pub fn zeros(mode: Mode, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            mode,
            data: vec![Scalar::zero(mode); rows * cols],
        }
    }

    pub fn identity(mode: Mode, n: usize) -> Matrix {
        let mut m = Matrix::zeros(mode, n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one(mode);
        }
        m
    }

    /// Rational matrix from integer rows; convenience for tests and fixtures.
    /// Panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Matrix {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged integer matrix literal");
            for &v in *row {
                data.push(Scalar::from_int(Mode::Rational, v));
            }
        }
        Matrix { rows: r, cols: c, mode: Mode::Rational, data }
    }

    /// Rational matrix of fractions p/q from integer pairs. Panics on a zero
    /// denominator or ragged input.
    pub fn from_ratios(rows: &[&[(i64, i64)]]) -> Matrix {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rational matrix literal");
            for &(p, q) in *row {
                data.push(Scalar::ratio(p, q));
            }
        }
        Matrix { rows: r, cols: c, mode: Mode::Rational, data }
    }

    /// Float matrix from f64 rows. Panics on ragged input.
    pub fn from_f64(rows: &[&[f64]]) -> Matrix {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged float matrix literal");
            for &v in *row {
                data.push(Scalar::Float(v));
            }
        }
        Matrix { rows: r, cols: c, mode: Mode::Float, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert_eq!(v.mode(), self.mode, "set() must preserve the matrix mode");
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    fn check_same_mode(&self, rhs: &Matrix, op: &'static str) -> Result<(), MatError> {
        if self.mode != rhs.mode {
            return Err(MatError::ModeMismatch { op });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix, MatError> {
        self.check_same_mode(rhs, "add")?;
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(MatError::DimensionMismatch {
                op: "add",
                detail: format!("{}x{} + {}x{}", self.rows, self.cols, rhs.rows, rhs.cols),
            });
        }
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, mode: self.mode, data })
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix, MatError> {
        self.check_same_mode(rhs, "sub")?;
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(MatError::DimensionMismatch {
                op: "sub",
                detail: format!("{}x{} - {}x{}", self.rows, self.cols, rhs.rows, rhs.cols),
            });
        }
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a.sub(b))
            .collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, mode: self.mode, data })
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, MatError> {
        self.check_same_mode(rhs, "mul")?;
        if self.cols != rhs.rows {
            return Err(MatError::DimensionMismatch {
                op: "mul",
                detail: format!("{}x{} * {}x{}", self.rows, self.cols, rhs.rows, rhs.cols),
            });
        }
        let mut out = Matrix::zeros(self.mode, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.get(i, k);
                if aik.is_zero_with(Some(0.0)) {
                    continue;
                }
                for j in 0..rhs.cols {
                    let cur = out.get(i, j).add(&aik.mul(rhs.get(k, j)));
                    out.data[i * rhs.cols + j] = cur;
                }
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Matrix {
        let data = self.data.iter().map(Scalar::neg).collect();
        Matrix { rows: self.rows, cols: self.cols, mode: self.mode, data }
    }

    pub fn scale(&self, s: &Scalar) -> Result<Matrix, MatError> {
        if s.mode() != self.mode {
            return Err(MatError::ModeMismatch { op: "scale" });
        }
        let data = self.data.iter().map(|a| a.mul(s)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, mode: self.mode, data })
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.mode, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        out
    }

    /// Horizontal concatenation [self | rhs].
    pub fn hstack(&self, rhs: &Matrix) -> Result<Matrix, MatError> {
        self.check_same_mode(rhs, "hstack")?;
        if self.rows != rhs.rows {
            return Err(MatError::DimensionMismatch {
                op: "hstack",
                detail: format!("{} rows vs {} rows", self.rows, rhs.rows),
            });
        }
        let mut data = Vec::with_capacity((self.cols + rhs.cols) * self.rows);
        for i in 0..self.rows {
            data.extend_from_slice(&self.data[i * self.cols..(i + 1) * self.cols]);
            data.extend_from_slice(&rhs.data[i * rhs.cols..(i + 1) * rhs.cols]);
        }
        Ok(Matrix { rows: self.rows, cols: self.cols + rhs.cols, mode: self.mode, data })
    }

    /// Vertical concatenation [self; rhs].
    pub fn vstack(&self, rhs: &Matrix) -> Result<Matrix, MatError> {
        self.check_same_mode(rhs, "vstack")?;
        if self.cols != rhs.cols {
            return Err(MatError::DimensionMismatch {
                op: "vstack",
                detail: format!("{} cols vs {} cols", self.cols, rhs.cols),
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Ok(Matrix { rows: self.rows + rhs.rows, cols: self.cols, mode: self.mode, data })
    }

    /// Copies rows `r0..r1` and columns `c0..c1` (half-open) into a new matrix.
    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Matrix {
        assert!(r0 <= r1 && r1 <= self.rows && c0 <= c1 && c1 <= self.cols);
        let mut out = Matrix::zeros(self.mode, r1 - r0, c1 - c0);
        for i in r0..r1 {
            for j in c0..c1 {
                out.data[(i - r0) * (c1 - c0) + (j - c0)] = self.get(i, j).clone();
            }
        }
        out
    }

    /// True when every entry is zero — exactly in Rational mode, within
    /// `tol` (default 1e-9) in Float mode.
    pub fn is_zero(&self, tol: Option<f64>) -> bool {
        self.data.iter().all(|s| s.is_zero_with(tol))
    }

    /// Entrywise equality: exact in Rational mode, within `tol` in Float.
    /// Dimension or mode mismatch is an error, not `false` — callers decide
    /// conformability questions explicitly.
    pub fn eq_within(&self, rhs: &Matrix, tol: Option<f64>) -> Result<bool, MatError> {
        self.check_same_mode(rhs, "eq_within")?;
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(MatError::DimensionMismatch {
                op: "eq_within",
                detail: format!("{}x{} vs {}x{}", self.rows, self.cols, rhs.rows, rhs.cols),
            });
        }
        Ok(self.sub(rhs)?.is_zero(tol))
    }

    /// Largest entry magnitude (used for relative float pivot thresholds).
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(Scalar::abs_f64).fold(0.0, f64::max)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// A 2x2 block decomposition of a matrix; the carrier for all the block
/// upper-triangular operators this crate constructs.
#[derive(Debug, Clone, PartialEq)]
pub struct Block2x2 {
    pub a11: Matrix,
    pub a12: Matrix,
    pub a21: Matrix,
    pub a22: Matrix,
}

/// Assembles four conformable blocks into one matrix.
pub fn assemble(b: &Block2x2) -> Result<Matrix, MatError> {
    if b.a11.rows() != b.a12.rows()
        || b.a21.rows() != b.a22.rows()
        || b.a11.cols() != b.a21.cols()
        || b.a12.cols() != b.a22.cols()
    {
        return Err(MatError::DimensionMismatch {
            op: "assemble",
            detail: format!(
                "blocks {}x{}, {}x{}, {}x{}, {}x{}",
                b.a11.rows(), b.a11.cols(), b.a12.rows(), b.a12.cols(),
                b.a21.rows(), b.a21.cols(), b.a22.rows(), b.a22.cols()
            ),
        });
    }
    let top = b.a11.hstack(&b.a12)?;
    let bottom = b.a21.hstack(&b.a22)?;
    top.vstack(&bottom)
}

/// Splits a matrix at `top_rows`/`left_cols` into a 2x2 block structure.
pub fn split(m: &Matrix, top_rows: usize, left_cols: usize) -> Result<Block2x2, MatError> {
    if top_rows > m.rows() || left_cols > m.cols() {
        return Err(MatError::DimensionMismatch {
            op: "split",
            detail: format!(
                "cut at ({top_rows}, {left_cols}) outside a {}x{} matrix",
                m.rows(),
                m.cols()
            ),
        });
    }
    Ok(Block2x2 {
        a11: m.submatrix(0, top_rows, 0, left_cols),
        a12: m.submatrix(0, top_rows, left_cols, m.cols()),
        a21: m.submatrix(top_rows, m.rows(), 0, left_cols),
        a22: m.submatrix(top_rows, m.rows(), left_cols, m.cols()),
    })
}

/// Block-diagonal assembly diag(a, b); the shape of every D in this crate.
pub fn block_diag(a: &Matrix, b: &Matrix) -> Result<Matrix, MatError> {
    assemble(&Block2x2 {
        a11: a.clone(),
        a12: Matrix::zeros(a.mode(), a.rows(), b.cols()),
        a21: Matrix::zeros(a.mode(), b.rows(), a.cols()),
        a22: b.clone(),
    })
}
