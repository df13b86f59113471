use thiserror::Error;

use crate::graph::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("linear form is zero")]
    InvalidWeight,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid moment graph: {0}")]
    InvalidGraph(ValidationReport),

    #[error("symmetry violation: {0}")]
    SymmetryViolation(String),

    #[error("point is not regular: weight of edge {edge} vanishes")]
    NotRegular { edge: usize },

    #[error("class is not in the GKM piece of degree {degree}: {reason}")]
    NotInPiece { degree: usize, reason: String },

    #[error("not a representation: {0}")]
    Representation(String),

    #[error("not a group action: {0}")]
    NotAnAction(String),

    #[error("not a character: {0}")]
    NotACharacter(String),

    #[error("theorem check failed: {0}")]
    TheoremViolation(String),

    #[error("inconsistent quotient action: {0}")]
    QuotientAction(String),

    #[error("computation did not terminate by degree {max_degree}")]
    DegreeCap { max_degree: usize },

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
