use std::error::Error;
use std::fmt;

/// Everything that can go wrong below the CLI layer.
///
/// Mathematical verdicts (an equation being unsolvable, a group inverse not
/// existing) are *not* errors — operations return them as ordinary result
/// variants so callers can branch. `MatError` is reserved for misuse
/// (dimension or mode mismatches), violated hypotheses, rejected
/// certificates, and internal consistency checks that must never fire.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatError {
    /// Operands have incompatible shapes for the requested operation.
    DimensionMismatch { op: &'static str, detail: String },
    /// A square matrix was required.
    NonSquare { rows: usize, cols: usize },
    /// Rational and float values were mixed in one computation.
    ModeMismatch { op: &'static str },
    /// A standing hypothesis of the operation does not hold
    /// (e.g. a required group inverse does not exist).
    HypothesisViolated { what: String },
    /// A supplied certificate or witness failed a defining identity.
    CertificateInvalid { failed: String },
    /// A matrix offered as a solution does not satisfy its equation.
    NotASolution { residual: String },
    /// A runtime consistency check that should be impossible to violate
    /// fired anyway; indicates corrupted input or a bug.
    InternalInconsistency { what: String },
    /// Malformed input data (JSON syntax or schema).
    Parse { file: String, detail: String },
}

impl fmt::Display for MatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatError::DimensionMismatch { op, detail } => {
                write!(f, "dimension mismatch in {op}: {detail}")
            }
            MatError::NonSquare { rows, cols } => {
                write!(f, "square matrix required, got {rows}x{cols}")
            }
            MatError::ModeMismatch { op } => {
                write!(f, "mixed rational/float operands in {op}")
            }
            MatError::HypothesisViolated { what } => {
                write!(f, "hypothesis violated: {what}")
            }
            MatError::CertificateInvalid { failed } => {
                write!(f, "certificate invalid: identity {failed} does not hold")
            }
            MatError::NotASolution { residual } => {
                write!(f, "supplied matrix does not solve the equation (residual {residual})")
            }
            MatError::InternalInconsistency { what } => {
                write!(f, "internal consistency check failed: {what}")
            }
            MatError::Parse { file, detail } => {
                write!(f, "parse error in {file}: {detail}")
            }
        }
    }
}

impl Error for MatError {}
