//! The two-unknown equation A·X − Y·B = C: solvable exactly when
//! A^π·C·B^π = 0, with an explicit parametrized family of all solutions and
//! a pseudo-equivalence certificate whose operator U is invertible exactly
//! on solvable instances.

use crate::equivalence::{verify_pseudo_equivalent, EquivalenceWitness};
use crate::error::MatError;
use crate::geninv::{group_inverse, GroupInverseResult};
use crate::linalg::inverse;
use crate::matrix::{assemble, block_diag, Block2x2, Matrix};

/// The full solution family of A·X − Y·B = C: a particular pair
/// (X₀, Y₀) = (A^♯·C, (A·A^♯ − I)·C·B^♯) and an evaluator producing
///   X = A^♯·C + A^♯·Z·B + A^π·Z₁
///   Y = −A^π·C·B^♯ + Z + A·A^♯·Z·B·B^♯ − Z·B·B^♯
/// for any parameters Z, Z₁ of the same shape as C. Every evaluation is
/// residual-checked before being returned.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoSidedSolutionFamily {
    pub x0: Matrix,
    pub y0: Matrix,
    a: Matrix,
    b: Matrix,
    c: Matrix,
    a_sharp: Matrix,
    a_pi: Matrix,
    aa_sharp: Matrix,
    b_sharp: Matrix,
    bb_sharp: Matrix,
}

#[derive(Debug, Clone, PartialEq)]
pub enum TwoSidedOutcome {
    Solvable(TwoSidedSolutionFamily),
    Unsolvable,
}

/// The pseudo-equivalence certificate for M = [[A, C], [0, B]] and
/// D = diag(A, B), together with U = D·Q·P·D·D^♯ + I − D·D^♯, which is
/// invertible precisely on solvable instances.
#[derive(Debug, Clone, PartialEq)]
pub struct EquivalenceCertificate {
    pub witness: EquivalenceWitness,
    pub u: Matrix,
    pub u_invertible: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub enum CertificateOutcome {
    Exists(EquivalenceCertificate),
    Unsolvable,
}

struct Hypotheses {
    ga: GroupInverseResult,
    gb: GroupInverseResult,
    aa_sharp: Matrix,
    bb_sharp: Matrix,
}

fn hypotheses(a: &Matrix, b: &Matrix, c: &Matrix, tol: Option<f64>) -> Result<Hypotheses, MatError> {
    if c.rows() != a.rows() || c.cols() != b.cols() {
        return Err(MatError::DimensionMismatch {
            op: "twosided",
            detail: format!(
                "C must be {}x{}, got {}x{}",
                a.rows(), b.cols(), c.rows(), c.cols()
            ),
        });
    }
    let ga = group_inverse(a, tol)?.required("A")?;
    let gb = group_inverse(b, tol)?.required("B")?;
    let aa_sharp = a.mul(&ga.a_sharp)?;
    let bb_sharp = b.mul(&gb.a_sharp)?;
    Ok(Hypotheses { ga, gb, aa_sharp, bb_sharp })
}

/// True iff A^π·C·B^π = 0, which (for group invertible A, B) is equivalent
/// to solvability of A·X − Y·B = C and to group invertibility of
/// [[A, C], [0, B]].
pub fn check_two_sided_solvable(
    a: &Matrix,
    b: &Matrix,
    c: &Matrix,
    tol: Option<f64>,
) -> Result<bool, MatError> {
    let h = hypotheses(a, b, c, tol)?;
    Ok(h.ga.a_pi.mul(c)?.mul(&h.gb.a_pi)?.is_zero(tol))
}

impl TwoSidedSolutionFamily {
    /// Evaluates the family at parameters Z, Z₁ (each shaped like C) and
    /// checks A·X − Y·B = C before returning. The residual holds for every
    /// parameter choice by construction, so its failure is reported as an
    /// internal inconsistency.
    pub fn evaluate(
        &self,
        z: &Matrix,
        z1: &Matrix,
        tol: Option<f64>,
    ) -> Result<(Matrix, Matrix), MatError> {
        for (name, m) in [("Z", z), ("Z1", z1)] {
            if m.rows() != self.c.rows() || m.cols() != self.c.cols() {
                return Err(MatError::DimensionMismatch {
                    op: "TwoSidedSolutionFamily::evaluate",
                    detail: format!(
                        "{name} must be {}x{}, got {}x{}",
                        self.c.rows(), self.c.cols(), m.rows(), m.cols()
                    ),
                });
            }
        }
        let x = self
            .x0
            .add(&self.a_sharp.mul(z)?.mul(&self.b)?)?
            .add(&self.a_pi.mul(z1)?)?;
        let y = self
            .y0
            .add(z)?
            .add(&self.aa_sharp.mul(z)?.mul(&self.bb_sharp)?)?
            .sub(&z.mul(&self.bb_sharp)?)?;
        let residual = self.a.mul(&x)?.sub(&y.mul(&self.b)?)?.sub(&self.c)?;
        if !residual.is_zero(tol) {
            return Err(MatError::InternalInconsistency {
                what: format!(
                    "family evaluation violated A X - Y B = C (max residual {})",
                    residual.max_abs()
                ),
            });
        }
        Ok((x, y))
    }
}

/// Decides A·X − Y·B = C and, when solvable, returns the whole family.
pub fn solve_two_sided(
    a: &Matrix,
    b: &Matrix,
    c: &Matrix,
    tol: Option<f64>,
) -> Result<TwoSidedOutcome, MatError> {
    let h = hypotheses(a, b, c, tol)?;
    if !h.ga.a_pi.mul(c)?.mul(&h.gb.a_pi)?.is_zero(tol) {
        return Ok(TwoSidedOutcome::Unsolvable);
    }
    let x0 = h.ga.a_sharp.mul(c)?;
    // (A·A^♯ − I)·C·B^♯ = −A^π·C·B^♯
    let y0 = h.ga.a_pi.mul(c)?.mul(&h.gb.a_sharp)?.neg();
    let family = TwoSidedSolutionFamily {
        x0,
        y0,
        a: a.clone(),
        b: b.clone(),
        c: c.clone(),
        a_sharp: h.ga.a_sharp.clone(),
        a_pi: h.ga.a_pi.clone(),
        aa_sharp: h.aa_sharp.clone(),
        b_sharp: h.gb.a_sharp.clone(),
        bb_sharp: h.bb_sharp.clone(),
    };
    let residual = a.mul(&family.x0)?.sub(&family.y0.mul(b)?)?.sub(c)?;
    if !residual.is_zero(tol) {
        return Err(MatError::InternalInconsistency {
            what: format!(
                "particular solution violated A X0 - Y0 B = C (max residual {})",
                residual.max_abs()
            ),
        });
    }
    Ok(TwoSidedOutcome::Solvable(family))
}

/// Recovers parameters that make the family reproduce a given solution
/// (X*, Y*): Z = Y*, Z₁ = X*. The reproduction is asserted, not trusted.
pub fn parameters_for_solution(
    a: &Matrix,
    b: &Matrix,
    c: &Matrix,
    x_star: &Matrix,
    y_star: &Matrix,
    tol: Option<f64>,
) -> Result<(Matrix, Matrix), MatError> {
    let residual = a.mul(x_star)?.sub(&y_star.mul(b)?)?.sub(c)?;
    if !residual.is_zero(tol) {
        return Err(MatError::NotASolution {
            residual: format!("max |A X* - Y* B - C| = {}", residual.max_abs()),
        });
    }
    let family = match solve_two_sided(a, b, c, tol)? {
        TwoSidedOutcome::Solvable(f) => f,
        TwoSidedOutcome::Unsolvable => {
            // a solution exists, so the criterion must hold
            return Err(MatError::InternalInconsistency {
                what: "instance has a solution but the solvability criterion failed".into(),
            });
        }
    };
    let (x, y) = family.evaluate(y_star, x_star, tol)?;
    if !x.eq_within(x_star, tol)? || !y.eq_within(y_star, tol)? {
        return Err(MatError::InternalInconsistency {
            what: "parameter recovery Z = Y*, Z1 = X* did not reproduce the solution".into(),
        });
    }
    Ok((y_star.clone(), x_star.clone()))
}

/// Builds the pseudo-equivalence certificate for a solvable instance:
///   P  = [[A·A^♯, A^π·C·B^♯], [0, B·B^♯]]    Q  = [[A·A^♯, A^♯·C], [0, B·B^♯]]
///   P⁻ = diag(A·A^♯, B·B^♯)                  Q⁻ = [[A·A^♯, −A^♯·C·B·B^♯], [0, B·B^♯]]
/// with M = P·D·Q and D = P⁻·M·Q⁻, and the operator
/// U = D·Q·P·D·D^♯ + I − D·D^♯, asserted equal to its closed block form
/// [[A + A^π, A·A^♯·C·B·B^♯], [0, B + B^π]] and tested for invertibility by
/// exact elimination.
pub fn build_equivalence_certificate(
    a: &Matrix,
    b: &Matrix,
    c: &Matrix,
    tol: Option<f64>,
) -> Result<CertificateOutcome, MatError> {
    let h = hypotheses(a, b, c, tol)?;
    if !h.ga.a_pi.mul(c)?.mul(&h.gb.a_pi)?.is_zero(tol) {
        return Ok(CertificateOutcome::Unsolvable);
    }
    let m = a.rows();
    let p = b.rows();
    let zero = Matrix::zeros(a.mode(), p, m);
    let witness = EquivalenceWitness {
        p: assemble(&Block2x2 {
            a11: h.aa_sharp.clone(),
            a12: h.ga.a_pi.mul(c)?.mul(&h.gb.a_sharp)?,
            a21: zero.clone(),
            a22: h.bb_sharp.clone(),
        })?,
        q: assemble(&Block2x2 {
            a11: h.aa_sharp.clone(),
            a12: h.ga.a_sharp.mul(c)?,
            a21: zero.clone(),
            a22: h.bb_sharp.clone(),
        })?,
        p_minus: block_diag(&h.aa_sharp, &h.bb_sharp)?,
        q_minus: assemble(&Block2x2 {
            a11: h.aa_sharp.clone(),
            a12: h.ga.a_sharp.mul(c)?.mul(&h.bb_sharp)?.neg(),
            a21: zero.clone(),
            a22: h.bb_sharp.clone(),
        })?,
    };
    let m_mat = assemble(&Block2x2 {
        a11: a.clone(),
        a12: c.clone(),
        a21: Matrix::zeros(a.mode(), p, m),
        a22: b.clone(),
    })?;
    let d = block_diag(a, b)?;
    let verification = verify_pseudo_equivalent(&m_mat, &d, &witness, tol)?;
    if let Some(failed) = verification.failed {
        return Err(MatError::InternalInconsistency {
            what: format!("constructed certificate failed identity {failed}"),
        });
    }
    // U two ways: the defining formula and the closed block form.
    let dd_sharp = d.mul(&block_diag(&h.ga.a_sharp, &h.gb.a_sharp)?)?;
    let ident = Matrix::identity(a.mode(), m + p);
    let u = d
        .mul(&witness.q)?
        .mul(&witness.p)?
        .mul(&dd_sharp)?
        .add(&ident)?
        .sub(&dd_sharp)?;
    let u_block = assemble(&Block2x2 {
        a11: a.add(&h.ga.a_pi)?,
        a12: h.aa_sharp.mul(c)?.mul(&h.bb_sharp)?,
        a21: Matrix::zeros(a.mode(), p, m),
        a22: b.add(&h.gb.a_pi)?,
    })?;
    if !u.eq_within(&u_block, tol)? {
        return Err(MatError::InternalInconsistency {
            what: "U = D Q P D D# + I - D D# does not match its closed block form".into(),
        });
    }
    let u_invertible = inverse(&u, tol)?.is_some();
    Ok(CertificateOutcome::Exists(EquivalenceCertificate { witness, u, u_invertible }))
}
