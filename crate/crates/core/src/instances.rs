//! Seeded random generation of group-invertible matrices and solvable
//! equation instances, for stress tests and the command-line `gen` mode.
//!
//! The recipe for a group-invertible matrix of prescribed rank r is
//! S·diag(K, 0)·S⁻¹ with K an invertible r×r core and S an invertible
//! change of basis: the result has index ≤ 1 by construction. Solvable
//! instances are built backwards — pick the unknowns first, then define C
//! as the exact left-hand side — so the planted solution is known.

use crate::error::MatError;
use crate::linalg::inverse;
use crate::matrix::Matrix;
use crate::scalar::{Mode, Scalar};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// What to generate: size, rank of each operator, seed, and the half-width
/// of the integer entry range (entries are drawn from [-entry_bound, entry_bound]).
#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub n: usize,
    pub rank: usize,
    pub seed: u64,
    pub entry_bound: i64,
}

impl GenSpec {
    pub fn new(n: usize, rank: usize, seed: u64) -> GenSpec {
        GenSpec { n, rank, seed, entry_bound: 5 }
    }
}

/// Which equation a generated instance targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquationKind {
    /// A·X − X·B = C
    Sylvester,
    /// A·X − Y·B = C
    TwoSided,
    /// A·Y·B − Y = C
    Stein,
}

/// A generated instance: the operators, a right-hand side that is solvable
/// by construction, and the unknowns that were planted to produce it.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub kind: EquationKind,
    pub a: Matrix,
    pub b: Matrix,
    pub c: Matrix,
    pub planted_x: Matrix,
    /// Present only for the two-sided equation.
    pub planted_y: Option<Matrix>,
}

fn random_entry(rng: &mut ChaCha8Rng, bound: i64) -> Scalar {
    Scalar::from_int(Mode::Rational, rng.gen_range(-bound..=bound))
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> Matrix {
    let mut m = Matrix::zeros(Mode::Rational, rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, random_entry(rng, bound));
        }
    }
    m
}

fn random_invertible(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Matrix {
    if n == 0 {
        return Matrix::zeros(Mode::Rational, 0, 0);
    }
    loop {
        let m = random_matrix(rng, n, n, bound);
        if inverse(&m, None).expect("square rational").is_some() {
            return m;
        }
    }
}

/// Generates a group-invertible n×n rational matrix of exactly the given
/// rank: S·diag(K, 0)·S⁻¹ with K invertible r×r.
pub fn gen_group_invertible(spec: &GenSpec) -> Result<Matrix, MatError> {
    if spec.rank > spec.n {
        return Err(MatError::DimensionMismatch {
            op: "gen_group_invertible",
            detail: format!("rank {} exceeds size {}", spec.rank, spec.n),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let k = random_invertible(&mut rng, spec.rank, spec.entry_bound);
    let s = random_invertible(&mut rng, spec.n, spec.entry_bound);
    let s_inv = inverse(&s, None)?.expect("generated invertible");
    let mut core = Matrix::zeros(Mode::Rational, spec.n, spec.n);
    for i in 0..spec.rank {
        for j in 0..spec.rank {
            core.set(i, j, k.get(i, j).clone());
        }
    }
    s.mul(&core)?.mul(&s_inv)
}

/// Generates a solvable instance of the requested equation with planted
/// unknowns. Operators A and B are group invertible with the given ranks;
/// for the row-reducing Stein form the operators are shifted so the shifted
/// pair (A + I, B + I) is group invertible, which the solving route needs.
pub fn gen_solvable_instance(
    kind: EquationKind,
    a_spec: &GenSpec,
    b_spec: &GenSpec,
) -> Result<Instance, MatError> {
    // Independent streams: the B operator and the planted unknowns must not
    // collapse onto A's stream when the two seeds coincide.
    let a = match kind {
        EquationKind::Stein => {
            let g = gen_group_invertible(a_spec)?;
            g.sub(&Matrix::identity(Mode::Rational, a_spec.n))?
        }
        _ => gen_group_invertible(a_spec)?,
    };
    let shifted_b_spec = GenSpec { seed: b_spec.seed.wrapping_add(0x9e3779b97f4a7c15), ..b_spec.clone() };
    let b = match kind {
        EquationKind::Stein => {
            let g = gen_group_invertible(&shifted_b_spec)?;
            g.sub(&Matrix::identity(Mode::Rational, b_spec.n))?
        }
        _ => gen_group_invertible(&shifted_b_spec)?,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(a_spec.seed ^ b_spec.seed.rotate_left(17) ^ 0xc2b2_ae35);
    let x = random_matrix(&mut rng, a_spec.n, b_spec.n, a_spec.entry_bound);
    match kind {
        EquationKind::Sylvester => {
            let c = a.mul(&x)?.sub(&x.mul(&b)?)?;
            Ok(Instance { kind, a, b, c, planted_x: x, planted_y: None })
        }
        EquationKind::TwoSided => {
            let y = random_matrix(&mut rng, a_spec.n, b_spec.n, a_spec.entry_bound);
            let c = a.mul(&x)?.sub(&y.mul(&b)?)?;
            Ok(Instance { kind, a, b, c, planted_x: x, planted_y: Some(y) })
        }
        EquationKind::Stein => {
            let c = a.mul(&x)?.mul(&b)?.sub(&x)?;
            Ok(Instance { kind, a, b, c, planted_x: x, planted_y: None })
        }
    }
}
