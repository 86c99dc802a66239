//! Inner inverses, group inverses, spectral idempotents, and the
//! block-triangular group-invertibility criterion.
//!
//! The group inverse of a square A is the unique X (when it exists) with
//! A·X·A = A, X·A·X = X, and A·X = X·A; it exists exactly when
//! rank(A) = rank(A²). Everything here is computed from a full-rank
//! factorization A = F·G: the group inverse is F·(G·F)⁻²·G and existence is
//! the invertibility of G·F — exact, deterministic, and independent of any
//! eigencomputation.

use crate::error::MatError;
use crate::linalg::{inverse, rank, rank_factorize};
use crate::matrix::{assemble, Block2x2, Matrix};

/// A group inverse together with the spectral idempotent A^π = I − A·A^♯
/// (the projection onto the null part of A along its range part).
#[derive(Debug, Clone, PartialEq)]
pub struct GroupInverseResult {
    pub a_sharp: Matrix,
    pub a_pi: Matrix,
    /// Always true for a returned result: existence IS the index condition.
    pub index_le_one: bool,
}

/// Existence verdict for the group inverse. Nonexistence is a normal
/// outcome (the matrix has index > 1), not a failure.
#[derive(Debug, Clone, PartialEq)]
pub enum GroupInverse {
    Exists(GroupInverseResult),
    NonExistent { rank: usize, rank_squared: usize },
}

impl GroupInverse {
    pub fn exists(&self) -> bool {
        matches!(self, GroupInverse::Exists(_))
    }

    /// Unwraps the result, mapping nonexistence to a hypothesis error with
    /// the offending operator's name — the shape every solver needs.
    pub fn required(self, name: &str) -> Result<GroupInverseResult, MatError> {
        match self {
            GroupInverse::Exists(r) => Ok(r),
            GroupInverse::NonExistent { rank, rank_squared } => {
                Err(MatError::HypothesisViolated {
                    what: format!(
                        "{name} is not group invertible (rank {rank} vs rank of square {rank_squared})"
                    ),
                })
            }
        }
    }
}

/// Computes the group inverse A^♯ = F·(G·F)⁻²·G from A = F·G, or reports
/// nonexistence when G·F is singular (equivalently rank(A²) < rank(A)).
pub fn group_inverse(a: &Matrix, tol: Option<f64>) -> Result<GroupInverse, MatError> {
    if !a.is_square() {
        return Err(MatError::NonSquare { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    let rf = rank_factorize(a, tol);
    let gf = rf.g.mul(&rf.f)?;
    let Some(gf_inv) = inverse(&gf, tol)? else {
        // rank(A²) = rank(G·F) since F has full column and G full row rank
        return Ok(GroupInverse::NonExistent {
            rank: rf.r,
            rank_squared: rank(&gf, tol),
        });
    };
    let gf_inv_sq = gf_inv.mul(&gf_inv)?;
    let a_sharp = rf.f.mul(&gf_inv_sq)?.mul(&rf.g)?;
    let a_pi = Matrix::identity(a.mode(), n).sub(&a.mul(&a_sharp)?)?;
    Ok(GroupInverse::Exists(GroupInverseResult {
        a_sharp,
        a_pi,
        index_le_one: true,
    }))
}

/// A deterministic inner inverse: with A = F·G, returns Gʳ·Fˡ where
/// Fˡ = (FᵀF)⁻¹Fᵀ is a left inverse of F and Gʳ = Gᵀ(GGᵀ)⁻¹ a right inverse
/// of G. Satisfies A·G⁻·A = A for every matrix; the zero m×n matrix maps to
/// the zero n×m matrix.
pub fn inner_inverse(a: &Matrix, tol: Option<f64>) -> Result<Matrix, MatError> {
    let rf = rank_factorize(a, tol);
    let ftf = rf.f.transpose().mul(&rf.f)?;
    let ggt = rf.g.mul(&rf.g.transpose())?;
    // Full-rank factors have invertible Gram matrices; in Float mode a
    // pathological tolerance could break that, which is worth a real error.
    let ftf_inv = inverse(&ftf, tol)?.ok_or_else(|| MatError::InternalInconsistency {
        what: "Gram matrix of a full-column-rank factor is singular".into(),
    })?;
    let ggt_inv = inverse(&ggt, tol)?.ok_or_else(|| MatError::InternalInconsistency {
        what: "Gram matrix of a full-row-rank factor is singular".into(),
    })?;
    let f_left = ftf_inv.mul(&rf.f.transpose())?;
    let g_right = rf.g.transpose().mul(&ggt_inv)?;
    g_right.mul(&f_left)
}

/// The inner-inverse family P⁻ + U − P⁻·P·U·P·P⁻: as U ranges over all
/// conformable matrices this produces inner inverses of P (and, with the
/// right U, every one of them). Rejects a P⁻ that is not an inner inverse.
pub fn inner_inverse_family(
    p: &Matrix,
    p_minus: &Matrix,
    u: &Matrix,
    tol: Option<f64>,
) -> Result<Matrix, MatError> {
    if p_minus.rows() != p.cols() || p_minus.cols() != p.rows() {
        return Err(MatError::DimensionMismatch {
            op: "inner_inverse_family",
            detail: format!(
                "P is {}x{}, P- must be {}x{}, got {}x{}",
                p.rows(), p.cols(), p.cols(), p.rows(), p_minus.rows(), p_minus.cols()
            ),
        });
    }
    if u.rows() != p_minus.rows() || u.cols() != p_minus.cols() {
        return Err(MatError::DimensionMismatch {
            op: "inner_inverse_family",
            detail: format!(
                "U must match P- ({}x{}), got {}x{}",
                p_minus.rows(), p_minus.cols(), u.rows(), u.cols()
            ),
        });
    }
    let ppm = p.mul(p_minus)?;
    if !ppm.mul(p)?.eq_within(p, tol)? {
        return Err(MatError::CertificateInvalid { failed: "P P- P = P".into() });
    }
    // P- + U - P- P U P P-
    let pmp = p_minus.mul(p)?;
    let correction = pmp.mul(u)?.mul(&ppm)?;
    p_minus.add(u)?.sub(&correction)
}

/// Solvability criterion for the block upper-triangular M = [[A, C], [0, B]]:
/// with A and B group invertible, M is group invertible iff A^π·C·B^π = 0.
pub fn block_triangular_group_invertible(
    a: &Matrix,
    b: &Matrix,
    c: &Matrix,
    tol: Option<f64>,
) -> Result<bool, MatError> {
    check_block_dims(a, b, c, "block_triangular_group_invertible")?;
    let ga = group_inverse(a, tol)?.required("A")?;
    let gb = group_inverse(b, tol)?.required("B")?;
    let product = ga.a_pi.mul(c)?.mul(&gb.a_pi)?;
    Ok(product.is_zero(tol))
}

/// The explicit group inverse of M = [[A, C], [0, B]]:
/// M^♯ = [[A^♯, S], [0, B^♯]] with S = (A^♯)²·C·B^π + A^π·C·(B^♯)² − A^♯·C·B^♯.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockGroupInverseParts {
    pub s: Matrix,
    pub m_sharp: Matrix,
}

#[derive(Debug, Clone, PartialEq)]
pub enum BlockGroupInverse {
    Exists(BlockGroupInverseParts),
    NonExistent,
}

pub fn block_group_inverse(
    a: &Matrix,
    b: &Matrix,
    c: &Matrix,
    tol: Option<f64>,
) -> Result<BlockGroupInverse, MatError> {
    check_block_dims(a, b, c, "block_group_inverse")?;
    let ga = group_inverse(a, tol)?.required("A")?;
    let gb = group_inverse(b, tol)?.required("B")?;
    if !ga.a_pi.mul(c)?.mul(&gb.a_pi)?.is_zero(tol) {
        return Ok(BlockGroupInverse::NonExistent);
    }
    let asq = ga.a_sharp.mul(&ga.a_sharp)?;
    let bsq = gb.a_sharp.mul(&gb.a_sharp)?;
    let s = asq
        .mul(c)?
        .mul(&gb.a_pi)?
        .add(&ga.a_pi.mul(c)?.mul(&bsq)?)?
        .sub(&ga.a_sharp.mul(c)?.mul(&gb.a_sharp)?)?;
    let m_sharp = assemble(&Block2x2 {
        a11: ga.a_sharp.clone(),
        a12: s.clone(),
        a21: Matrix::zeros(a.mode(), b.rows(), a.rows()),
        a22: gb.a_sharp.clone(),
    })?;
    Ok(BlockGroupInverse::Exists(BlockGroupInverseParts { s, m_sharp }))
}

fn check_block_dims(a: &Matrix, b: &Matrix, c: &Matrix, op: &'static str) -> Result<(), MatError> {
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
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::block_diag;
    use crate::scalar::Mode;

    fn unwrap_exists(g: GroupInverse) -> GroupInverseResult {
        match g {
            GroupInverse::Exists(r) => r,
            GroupInverse::NonExistent { .. } => panic!("expected group inverse to exist"),
        }
    }

    #[test]
    fn worked_4x4_a_sharp_and_projection() {
        let a = Matrix::from_i64(&[
            &[-1, 0, 1, 2],
            &[-1, 1, 0, -1],
            &[0, -1, 1, 3],
            &[1, 1, -2, -5],
        ]);
        let expected_sharp = Matrix::from_i64(&[
            &[-5, 4, 1, -2],
            &[-21, 17, 4, -9],
            &[16, -13, -3, 7],
            &[-11, 9, 2, -5],
        ]);
        let expected_aa_sharp = Matrix::from_i64(&[
            &[-1, 1, 0, -1],
            &[-5, 4, 1, -2],
            &[4, -3, -1, 1],
            &[-3, 2, 1, 0],
        ]);
        let r = unwrap_exists(group_inverse(&a, None).unwrap());
        assert_eq!(r.a_sharp, expected_sharp);
        assert_eq!(a.mul(&r.a_sharp).unwrap(), expected_aa_sharp);
        // the three defining axioms, exactly
        assert_eq!(a.mul(&r.a_sharp).unwrap().mul(&a).unwrap(), a);
        assert_eq!(r.a_sharp.mul(&a).unwrap().mul(&r.a_sharp).unwrap(), r.a_sharp);
        assert_eq!(a.mul(&r.a_sharp).unwrap(), r.a_sharp.mul(&a).unwrap());
    }

    #[test]
    fn diagonal_with_zero_block() {
        let a = Matrix::from_i64(&[&[2, 0], &[0, 0]]);
        let r = unwrap_exists(group_inverse(&a, None).unwrap());
        assert_eq!(r.a_sharp, Matrix::from_ratios(&[&[(1, 2), (0, 1)], &[(0, 1), (0, 1)]]));
        assert_eq!(r.a_pi, Matrix::from_i64(&[&[0, 0], &[0, 1]]));
    }

    #[test]
    fn nilpotent_has_no_group_inverse() {
        let a = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        match group_inverse(&a, None).unwrap() {
            GroupInverse::NonExistent { rank, rank_squared } => {
                assert_eq!(rank, 1);
                assert_eq!(rank_squared, 0);
            }
            GroupInverse::Exists(_) => panic!("nilpotent of index 2 must not have a group inverse"),
        }
    }

    #[test]
    fn zero_matrix_group_inverse_is_zero() {
        let a = Matrix::zeros(Mode::Rational, 3, 3);
        let r = unwrap_exists(group_inverse(&a, None).unwrap());
        assert_eq!(r.a_sharp, a);
        assert_eq!(r.a_pi, Matrix::identity(Mode::Rational, 3));
    }

    #[test]
    fn non_square_rejected() {
        let a = Matrix::zeros(Mode::Rational, 2, 3);
        assert!(matches!(group_inverse(&a, None), Err(MatError::NonSquare { .. })));
    }

    #[test]
    fn inner_inverse_identity_and_zero() {
        let i2 = Matrix::identity(Mode::Rational, 2);
        assert_eq!(inner_inverse(&i2, None).unwrap(), i2);
        let z = Matrix::zeros(Mode::Rational, 2, 3);
        assert_eq!(inner_inverse(&z, None).unwrap(), Matrix::zeros(Mode::Rational, 3, 2));
    }

    #[test]
    fn inner_inverse_defining_identity() {
        let a = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
        let g = inner_inverse(&a, None).unwrap();
        assert_eq!(a.mul(&g).unwrap().mul(&a).unwrap(), a);
        assert_eq!(g, Matrix::from_i64(&[&[1, 0], &[0, 0]]));
    }

    #[test]
    fn family_with_zero_u_returns_p_minus() {
        let p = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
        let u = Matrix::zeros(Mode::Rational, 2, 2);
        assert_eq!(inner_inverse_family(&p, &p, &u, None).unwrap(), p);
    }

    #[test]
    fn family_produces_new_inner_inverse() {
        let p = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
        let u = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let g = inner_inverse_family(&p, &p, &u, None).unwrap();
        assert_eq!(g, Matrix::from_i64(&[&[1, 1], &[0, 0]]));
        assert_eq!(p.mul(&g).unwrap().mul(&p).unwrap(), p);
    }

    #[test]
    fn family_rejects_bad_p_minus() {
        let p = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
        let bad = Matrix::from_i64(&[&[0, 0], &[0, 1]]);
        let u = Matrix::zeros(Mode::Rational, 2, 2);
        assert!(matches!(
            inner_inverse_family(&p, &bad, &u, None),
            Err(MatError::CertificateInvalid { .. })
        ));
    }

    #[test]
    fn block_criterion_zero_c_and_counterexample() {
        let a = Matrix::from_i64(&[&[2]]);
        let b = Matrix::from_i64(&[&[3]]);
        let zero = Matrix::zeros(Mode::Rational, 1, 1);
        assert!(block_triangular_group_invertible(&a, &b, &zero, None).unwrap());
        let z = Matrix::from_i64(&[&[0]]);
        let one = Matrix::from_i64(&[&[1]]);
        assert!(!block_triangular_group_invertible(&z, &z, &one, None).unwrap());
    }

    #[test]
    fn block_criterion_hypothesis_violated() {
        let nil = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let b = Matrix::identity(Mode::Rational, 2);
        let c = Matrix::zeros(Mode::Rational, 2, 2);
        assert!(matches!(
            block_triangular_group_invertible(&nil, &b, &c, None),
            Err(MatError::HypothesisViolated { .. })
        ));
    }

    #[test]
    fn block_group_inverse_scalar_example() {
        let a = Matrix::from_i64(&[&[2]]);
        let b = Matrix::from_i64(&[&[0]]);
        let c = Matrix::from_i64(&[&[1]]);
        match block_group_inverse(&a, &b, &c, None).unwrap() {
            BlockGroupInverse::Exists(parts) => {
                assert_eq!(parts.s, Matrix::from_ratios(&[&[(1, 4)]]));
                assert_eq!(
                    parts.m_sharp,
                    Matrix::from_ratios(&[&[(1, 2), (1, 4)], &[(0, 1), (0, 1)]])
                );
                // axioms against M
                let m = Matrix::from_i64(&[&[2, 1], &[0, 0]]);
                assert_eq!(m.mul(&parts.m_sharp).unwrap().mul(&m).unwrap(), m);
                assert_eq!(
                    parts.m_sharp.mul(&m).unwrap().mul(&parts.m_sharp).unwrap(),
                    parts.m_sharp
                );
                assert_eq!(m.mul(&parts.m_sharp).unwrap(), parts.m_sharp.mul(&m).unwrap());
            }
            BlockGroupInverse::NonExistent => panic!("criterion holds here"),
        }
    }

    #[test]
    fn block_group_inverse_zero_c_is_diagonal() {
        let a = Matrix::from_i64(&[&[2]]);
        let b = Matrix::from_i64(&[&[5]]);
        let c = Matrix::zeros(Mode::Rational, 1, 1);
        match block_group_inverse(&a, &b, &c, None).unwrap() {
            BlockGroupInverse::Exists(parts) => {
                assert!(parts.s.is_zero(None));
                let expected = block_diag(
                    &Matrix::from_ratios(&[&[(1, 2)]]),
                    &Matrix::from_ratios(&[&[(1, 5)]]),
                )
                .unwrap();
                assert_eq!(parts.m_sharp, expected);
            }
            BlockGroupInverse::NonExistent => panic!("criterion holds here"),
        }
    }

    #[test]
    fn block_group_inverse_criterion_failure_is_verdict() {
        let z = Matrix::from_i64(&[&[0]]);
        let one = Matrix::from_i64(&[&[1]]);
        assert_eq!(
            block_group_inverse(&z, &z, &one, None).unwrap(),
            BlockGroupInverse::NonExistent
        );
    }
}
