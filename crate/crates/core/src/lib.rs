//! Constructive group/inner-inverse machinery for three matrix equations —
//! the one-unknown Sylvester equation `AX − XB = C`, the two-unknown
//! equation `AX − YB = C`, and the Stein equation `AYB − Y = C` — over exact
//! rational (normative) and floating-point matrices.
//!
//! The crate decides solvability, produces particular and general solutions,
//! constructs checkable certificates (pseudo-similarity and
//! pseudo-equivalence witnesses whose finitely many identities prove the
//! verdict), and cross-validates everything against an independent
//! brute-force vectorization oracle.

pub mod equivalence;
pub mod error;
pub mod geninv;
pub mod instances;
pub mod json;
pub mod linalg;
pub mod matrix;
pub mod oracle;
pub mod scalar;
pub mod stein;
pub mod sylvester;
pub mod twosided;

pub use error::MatError;
pub use matrix::{assemble, block_diag, split, Block2x2, Matrix};
pub use scalar::{Mode, Scalar, DEFAULT_FLOAT_TOL};
