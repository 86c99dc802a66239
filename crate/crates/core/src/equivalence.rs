//! Pseudo-similarity and pseudo-equivalence witnesses and their verifiers.
//!
//! A is pseudo-similar to B via T when there are inner inverses T⁻ and T⁼ of
//! T with A = T·B·T⁼ and B = T⁻·A·T. A is pseudo-equivalent to B via (P, Q)
//! when B appears as P⁻·A·Q⁻ and A as P·B·Q for inner inverses P⁻, Q⁻.
//! Verification checks the defining identities and then the consequences
//! they force (absorption laws, intertwining); the verdict is the
//! conjunction of every check, and `failed` names the first identity that
//! breaks, in a fixed order, so failures are comparable across runs.

use crate::error::MatError;
use crate::matrix::Matrix;

/// A pseudo-similarity witness: A = T·B·T⁼ and B = T⁻·A·T, with T⁻ and T⁼
/// both inner inverses of T. For A of size x×x and B of size y×y, T is x×y
/// and both inner inverses are y×x.
#[derive(Debug, Clone, PartialEq)]
pub struct SimilarityWitness {
    pub t: Matrix,
    pub t_minus: Matrix,
    pub t_equals: Matrix,
}

/// A pseudo-equivalence witness: A = P·B·Q and B = P⁻·A·Q⁻, with P⁻, Q⁻
/// inner inverses of P, Q. For A of size x×x and B of size y×y, P is x×y,
/// Q is y×x, P⁻ is y×x, and Q⁻ is x×y.
#[derive(Debug, Clone, PartialEq)]
pub struct EquivalenceWitness {
    pub p: Matrix,
    pub q: Matrix,
    pub p_minus: Matrix,
    pub q_minus: Matrix,
}

/// One named identity and whether it held.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
}

/// Outcome of verifying a witness: `valid` is the conjunction of every
/// check; `failed` names the first identity (in the fixed order) that did
/// not hold.
#[derive(Debug, Clone, PartialEq)]
pub struct Verification {
    pub valid: bool,
    pub failed: Option<String>,
    pub checks: Vec<IdentityCheck>,
}

impl Verification {
    fn from_checks(checks: Vec<IdentityCheck>) -> Verification {
        let failed = checks.iter().find(|c| !c.holds).map(|c| c.name.clone());
        Verification { valid: failed.is_none(), failed, checks }
    }
}

fn push_check(
    checks: &mut Vec<IdentityCheck>,
    name: &str,
    lhs: &Matrix,
    rhs: &Matrix,
    tol: Option<f64>,
) -> Result<(), MatError> {
    let holds = lhs.eq_within(rhs, tol)?;
    checks.push(IdentityCheck { name: name.to_string(), holds });
    Ok(())
}

/// Verifies a pseudo-similarity witness for A and B. Checks, in order: the
/// two inner-inverse conditions, the two defining transport identities, and
/// eight consequences (projection absorptions and the intertwining pair).
/// Dimension mismatches are errors, not failed checks — a wrongly shaped
/// witness is malformed rather than invalid.
pub fn verify_pseudo_similar(
    a: &Matrix,
    b: &Matrix,
    w: &SimilarityWitness,
    tol: Option<f64>,
) -> Result<Verification, MatError> {
    if !a.is_square() {
        return Err(MatError::NonSquare { rows: a.rows(), cols: a.cols() });
    }
    if !b.is_square() {
        return Err(MatError::NonSquare { rows: b.rows(), cols: b.cols() });
    }
    let x = a.rows();
    let y = b.rows();
    for (name, m, want_r, want_c) in [
        ("T", &w.t, x, y),
        ("T-", &w.t_minus, y, x),
        ("T=", &w.t_equals, y, x),
    ] {
        if m.rows() != want_r || m.cols() != want_c {
            return Err(MatError::DimensionMismatch {
                op: "verify_pseudo_similar",
                detail: format!(
                    "{name} must be {want_r}x{want_c}, got {}x{}",
                    m.rows(), m.cols()
                ),
            });
        }
    }

    let t = &w.t;
    let tm = &w.t_minus;
    let te = &w.t_equals;
    let mut checks = Vec::new();

    push_check(&mut checks, "T Tm T = T", &t.mul(tm)?.mul(t)?, t, tol)?;
    push_check(&mut checks, "T Te T = T", &t.mul(te)?.mul(t)?, t, tol)?;
    push_check(&mut checks, "A = T B Te", a, &t.mul(b)?.mul(te)?, tol)?;
    push_check(&mut checks, "B = Tm A T", b, &tm.mul(a)?.mul(t)?, tol)?;
    push_check(
        &mut checks,
        "A = T Tm A T Te",
        a,
        &t.mul(tm)?.mul(a)?.mul(t)?.mul(te)?,
        tol,
    )?;
    push_check(&mut checks, "A = A T Te", a, &a.mul(t)?.mul(te)?, tol)?;
    push_check(&mut checks, "A = T Tm A", a, &t.mul(tm)?.mul(a)?, tol)?;
    push_check(
        &mut checks,
        "B = Tm T B Te T",
        b,
        &tm.mul(t)?.mul(b)?.mul(te)?.mul(t)?,
        tol,
    )?;
    push_check(&mut checks, "B = Tm T B", b, &tm.mul(t)?.mul(b)?, tol)?;
    push_check(&mut checks, "B = B Te T", b, &b.mul(te)?.mul(t)?, tol)?;
    push_check(&mut checks, "A T = T B", &a.mul(t)?, &t.mul(b)?, tol)?;
    push_check(&mut checks, "B Te = Tm A", &b.mul(te)?, &tm.mul(a)?, tol)?;

    Ok(Verification::from_checks(checks))
}

/// Verifies a pseudo-equivalence witness for A and B: the two inner-inverse
/// conditions, the transport identities A = P·B·Q and B = P⁻·A·Q⁻, and the
/// four absorption consequences.
pub fn verify_pseudo_equivalent(
    a: &Matrix,
    b: &Matrix,
    w: &EquivalenceWitness,
    tol: Option<f64>,
) -> Result<Verification, MatError> {
    if !a.is_square() {
        return Err(MatError::NonSquare { rows: a.rows(), cols: a.cols() });
    }
    if !b.is_square() {
        return Err(MatError::NonSquare { rows: b.rows(), cols: b.cols() });
    }
    let x = a.rows();
    let y = b.rows();
    for (name, m, want_r, want_c) in [
        ("P", &w.p, x, y),
        ("Q", &w.q, y, x),
        ("P-", &w.p_minus, y, x),
        ("Q-", &w.q_minus, x, y),
    ] {
        if m.rows() != want_r || m.cols() != want_c {
            return Err(MatError::DimensionMismatch {
                op: "verify_pseudo_equivalent",
                detail: format!(
                    "{name} must be {want_r}x{want_c}, got {}x{}",
                    m.rows(), m.cols()
                ),
            });
        }
    }

    let p = &w.p;
    let q = &w.q;
    let pm = &w.p_minus;
    let qm = &w.q_minus;
    let mut checks = Vec::new();

    push_check(&mut checks, "P Pm P = P", &p.mul(pm)?.mul(p)?, p, tol)?;
    push_check(&mut checks, "Q Qm Q = Q", &q.mul(qm)?.mul(q)?, q, tol)?;
    push_check(&mut checks, "A = P B Q", a, &p.mul(b)?.mul(q)?, tol)?;
    push_check(&mut checks, "B = Pm A Qm", b, &pm.mul(a)?.mul(qm)?, tol)?;
    push_check(&mut checks, "Pm P B = B", &pm.mul(p)?.mul(b)?, b, tol)?;
    push_check(&mut checks, "B Q Qm = B", &b.mul(q)?.mul(qm)?, b, tol)?;
    push_check(&mut checks, "P Pm A = A", &p.mul(pm)?.mul(a)?, a, tol)?;
    push_check(&mut checks, "A Qm Q = A", &a.mul(qm)?.mul(q)?, a, tol)?;

    Ok(Verification::from_checks(checks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Mode;

    fn identity_witness(n: usize) -> SimilarityWitness {
        let i = Matrix::identity(Mode::Rational, n);
        SimilarityWitness { t: i.clone(), t_minus: i.clone(), t_equals: i }
    }

    #[test]
    fn identity_transport_is_valid() {
        let a = Matrix::from_i64(&[&[1, 2], &[3, 4]]);
        let v = verify_pseudo_similar(&a, &a, &identity_witness(2), None).unwrap();
        assert!(v.valid);
        assert_eq!(v.failed, None);
        assert_eq!(v.checks.len(), 12);
        assert!(v.checks.iter().all(|c| c.holds));
    }

    #[test]
    fn rank_deficient_self_similarity() {
        // A = diag(1, 0), T = T- = T= = diag(1, 0): transports A to itself.
        let a = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
        let w = SimilarityWitness { t: a.clone(), t_minus: a.clone(), t_equals: a.clone() };
        let v = verify_pseudo_similar(&a, &a, &w, None).unwrap();
        assert!(v.valid);
    }

    #[test]
    fn broken_transport_names_first_failure() {
        let a = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
        let b = Matrix::from_i64(&[&[0, 0], &[0, 1]]);
        let v = verify_pseudo_similar(&a, &b, &identity_witness(2), None).unwrap();
        assert!(!v.valid);
        assert_eq!(v.failed.as_deref(), Some("A = T B Te"));
    }

    #[test]
    fn broken_inner_inverse_condition_comes_first() {
        // T = diag(1,0) but T- = I is fine (T T- T = T holds); instead break
        // it with T- that fails absorption: T = [[1,0],[0,0]], T- = [[0,0],[0,1]]
        // gives T T- T = 0 != T.
        let a = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
        let t = a.clone();
        let bad = Matrix::from_i64(&[&[0, 0], &[0, 1]]);
        let w = SimilarityWitness { t, t_minus: bad, t_equals: a.clone() };
        let v = verify_pseudo_similar(&a, &a, &w, None).unwrap();
        assert!(!v.valid);
        assert_eq!(v.failed.as_deref(), Some("T Tm T = T"));
    }

    #[test]
    fn similarity_dimension_mismatch_is_error() {
        let a = Matrix::from_i64(&[&[1]]);
        let b = Matrix::from_i64(&[&[1, 0], &[0, 1]]);
        let i = Matrix::identity(Mode::Rational, 2);
        let w = SimilarityWitness { t: i.clone(), t_minus: i.clone(), t_equals: i };
        assert!(matches!(
            verify_pseudo_similar(&a, &b, &w, None),
            Err(MatError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn equivalence_identity_witness_valid() {
        let a = Matrix::from_i64(&[&[1, 2], &[3, 4]]);
        let i = Matrix::identity(Mode::Rational, 2);
        let w = EquivalenceWitness {
            p: i.clone(),
            q: i.clone(),
            p_minus: i.clone(),
            q_minus: i,
        };
        let v = verify_pseudo_equivalent(&a, &a, &w, None).unwrap();
        assert!(v.valid);
        assert_eq!(v.checks.len(), 8);
    }

    #[test]
    fn equivalence_detects_broken_transport() {
        let a = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
        let b = Matrix::from_i64(&[&[0, 0], &[0, 1]]);
        let i = Matrix::identity(Mode::Rational, 2);
        let w = EquivalenceWitness {
            p: i.clone(),
            q: i.clone(),
            p_minus: i.clone(),
            q_minus: i,
        };
        let v = verify_pseudo_equivalent(&a, &b, &w, None).unwrap();
        assert!(!v.valid);
        assert_eq!(v.failed.as_deref(), Some("A = P B Q"));
    }

    #[test]
    fn equivalence_projector_witness() {
        // P = Q = P- = Q- = diag(1,0) transports A = diag(5,0) to itself.
        let e = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
        let a = Matrix::from_i64(&[&[5, 0], &[0, 0]]);
        let w = EquivalenceWitness {
            p: e.clone(),
            q: e.clone(),
            p_minus: e.clone(),
            q_minus: e,
        };
        let v = verify_pseudo_equivalent(&a, &a, &w, None).unwrap();
        assert!(v.valid);
    }

    #[test]
    fn float_mode_tolerance_respected() {
        let a = Matrix::from_f64(&[&[1.0, 0.0], &[0.0, 0.0]]);
        let t = Matrix::from_f64(&[&[1.0 + 1e-12, 0.0], &[0.0, 0.0]]);
        let w = SimilarityWitness { t: t.clone(), t_minus: t.clone(), t_equals: t };
        let v = verify_pseudo_similar(&a, &a, &w, None).unwrap();
        assert!(v.valid, "1e-12 perturbation is inside the default tolerance");
        let strict = verify_pseudo_similar(&a, &a, &w, Some(1e-15)).unwrap();
        assert!(!strict.valid, "1e-15 tolerance must reject it");
    }
}
