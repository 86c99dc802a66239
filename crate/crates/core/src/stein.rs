//! The equation A·Y·B − Y = C, reduced to the two-unknown equation
//! (A+I)·X − Y·(B+I) = C whose solutions must additionally satisfy the
//! coupling X = Y·B.
//!
//! The reduction's criterion — (A+I)^π·C·(B+I)^π = 0 — is necessary for
//! solvability but not sufficient: the shifted equation has solutions that
//! ignore the coupling. The solver therefore enforces X = Y·B explicitly as
//! an exact linear feasibility problem over the family's free parameters,
//! runs the brute-force oracle independently, and reports both verdicts
//! side by side. The scalar instance A = B = C = [1] makes the criterion
//! true while no solution exists; the report exposes such disagreements
//! instead of hiding them.

use crate::error::MatError;
use crate::geninv::group_inverse;
use crate::linalg::{solve_linear, LinearSolution};
use crate::matrix::Matrix;
use crate::oracle::{kron, oracle_stein, unvec_rows, vec_rows, OracleOutcome};
use crate::twosided::{
    build_equivalence_certificate, solve_two_sided, CertificateOutcome, EquivalenceCertificate,
    TwoSidedOutcome,
};

/// The reduction's criterion together with the pseudo-equivalence
/// certificate for the shifted operators (present exactly when the
/// criterion holds).
#[derive(Debug, Clone, PartialEq)]
pub struct SteinCriterion {
    pub holds: bool,
    pub certificate: Option<EquivalenceCertificate>,
}

/// Everything a Stein solve produces: the criterion verdict and its
/// certificate, the solution found by the coupled-parameter search (if
/// any), the solution found by the independent oracle (if any), and whether
/// the criterion agreed with ground truth.
#[derive(Debug, Clone, PartialEq)]
pub struct SteinReport {
    pub criterion_holds: bool,
    pub certificate: Option<EquivalenceCertificate>,
    pub coupled_solution: Option<Matrix>,
    pub oracle_solution: Option<Matrix>,
    pub verdicts_agree: bool,
}

fn shifted(a: &Matrix, b: &Matrix) -> Result<(Matrix, Matrix), MatError> {
    if !a.is_square() {
        return Err(MatError::NonSquare { rows: a.rows(), cols: a.cols() });
    }
    if !b.is_square() {
        return Err(MatError::NonSquare { rows: b.rows(), cols: b.cols() });
    }
    let a1 = a.add(&Matrix::identity(a.mode(), a.rows()))?;
    let b1 = b.add(&Matrix::identity(b.mode(), b.rows()))?;
    Ok((a1, b1))
}

/// Evaluates the criterion (A+I)^π·C·(B+I)^π = 0 and builds the
/// pseudo-equivalence certificate for the shifted pair when it holds.
/// Requires A+I and B+I group invertible.
pub fn check_stein_criterion(
    a: &Matrix,
    b: &Matrix,
    c: &Matrix,
    tol: Option<f64>,
) -> Result<SteinCriterion, MatError> {
    let (a1, b1) = shifted(a, b)?;
    group_inverse(&a1, tol)?.required("A+I")?;
    group_inverse(&b1, tol)?.required("B+I")?;
    match build_equivalence_certificate(&a1, &b1, c, tol)? {
        CertificateOutcome::Exists(cert) => {
            if !cert.u_invertible {
                return Err(MatError::InternalInconsistency {
                    what: "certificate operator U is singular on a solvable shifted instance"
                        .into(),
                });
            }
            Ok(SteinCriterion { holds: true, certificate: Some(cert) })
        }
        CertificateOutcome::Unsolvable => Ok(SteinCriterion { holds: false, certificate: None }),
    }
}

/// Searches the shifted equation's solution family for parameters (Z, Z₁)
/// that satisfy the coupling X = Y·B, by exact elimination over the
/// parameter entries. Returns the coupled Y (the Stein solution) if any.
fn coupled_search(a: &Matrix, b: &Matrix, c: &Matrix, tol: Option<f64>) -> Result<Option<Matrix>, MatError> {
    let (a1, b1) = shifted(a, b)?;
    let family = match solve_two_sided(&a1, &b1, c, tol)? {
        TwoSidedOutcome::Solvable(f) => f,
        TwoSidedOutcome::Unsolvable => return Ok(None),
    };
    let n = a.rows();
    let p = b.rows();
    let g1 = group_inverse(&a1, tol)?.required("A+I")?;
    let g2 = group_inverse(&b1, tol)?.required("B+I")?;
    let a1a1s = a1.mul(&g1.a_sharp)?;
    let b1b1s = b1.mul(&g2.a_sharp)?;
    let i_n = Matrix::identity(a.mode(), n);
    let i_p = Matrix::identity(a.mode(), p);

    // X − Y·B = (X₀ − Y₀·B)
    //         + A₁^♯·Z·B₁ − Z·B − A₁A₁^♯·Z·(B₁B₁^♯B) + Z·(B₁B₁^♯B)
    //         + A₁^π·Z₁
    // Row-major vectorization turns each Z-linear map L·Z·R into L ⊗ Rᵀ.
    let bbb = b1b1s.mul(b)?;
    let k_z = kron(&g1.a_sharp, &b1.transpose())?
        .sub(&kron(&i_n, &b.transpose())?)?
        .sub(&kron(&a1a1s, &bbb.transpose())?)?
        .add(&kron(&i_n, &bbb.transpose())?)?;
    let k_z1 = kron(&g1.a_pi, &i_p)?;
    let coeff = k_z.hstack(&k_z1)?;
    let rhs = vec_rows(&family.y0.mul(b)?.sub(&family.x0)?);

    let (z, z1) = match solve_linear(&coeff, &rhs, tol)? {
        LinearSolution::Solvable { particular, .. } => {
            let z = unvec_rows(&particular.submatrix(0, n * p, 0, 1), n, p)?;
            let z1 = unvec_rows(&particular.submatrix(n * p, 2 * n * p, 0, 1), n, p)?;
            (z, z1)
        }
        LinearSolution::Infeasible => return Ok(None),
    };
    let (x, y) = family.evaluate(&z, &z1, tol)?;
    if !x.eq_within(&y.mul(b)?, tol)? {
        return Err(MatError::InternalInconsistency {
            what: "coupled parameters found but X = Y B does not hold".into(),
        });
    }
    let residual = a.mul(&y)?.mul(b)?.sub(&y)?.sub(c)?;
    if !residual.is_zero(tol) {
        return Err(MatError::InternalInconsistency {
            what: format!(
                "coupled solution violated A Y B - Y = C (max residual {})",
                residual.max_abs()
            ),
        });
    }
    Ok(Some(y))
}

/// Decides A·Y·B − Y = C along both routes — the reduction with enforced
/// coupling and the vectorization oracle — and reports criterion,
/// certificate, both solutions, and whether the verdicts agree.
pub fn solve_stein(a: &Matrix, b: &Matrix, c: &Matrix, tol: Option<f64>) -> Result<SteinReport, MatError> {
    if c.rows() != a.rows() || c.cols() != b.cols() {
        return Err(MatError::DimensionMismatch {
            op: "solve_stein",
            detail: format!(
                "C must be {}x{}, got {}x{}",
                a.rows(), b.cols(), c.rows(), c.cols()
            ),
        });
    }
    let criterion = check_stein_criterion(a, b, c, tol)?;
    let coupled_solution = if criterion.holds { coupled_search(a, b, c, tol)? } else { None };
    let oracle_solution = match oracle_stein(a, b, c, tol)? {
        OracleOutcome::Solvable { x, .. } => {
            let residual = a.mul(&x)?.mul(b)?.sub(&x)?.sub(c)?;
            if !residual.is_zero(tol) {
                return Err(MatError::InternalInconsistency {
                    what: format!(
                        "oracle solution violated A Y B - Y = C (max residual {})",
                        residual.max_abs()
                    ),
                });
            }
            Some(x)
        }
        OracleOutcome::Unsolvable => None,
    };
    let verdicts_agree = criterion.holds == oracle_solution.is_some();
    Ok(SteinReport {
        criterion_holds: criterion.holds,
        certificate: criterion.certificate,
        coupled_solution,
        oracle_solution,
        verdicts_agree,
    })
}
