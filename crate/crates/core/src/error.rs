use thiserror::Error;

use crate::poly::VariableSpace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable space mismatch: {left} vs {right}")]
    SpaceMismatch {
        left: VariableSpace,
        right: VariableSpace,
    },

    #[error("operation needs a {expected} polynomial, got {got}")]
    WrongSpaceKind {
        expected: &'static str,
        got: VariableSpace,
    },

    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("variable {var} is out of range for {space}")]
    IndexOutOfRange { var: String, space: VariableSpace },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("invalid minor: {0}")]
    InvalidMinor(String),

    #[error("bitableau {0} is not standard")]
    NotStandard(String),

    #[error("bitableau {tableau} has a factor of size {size} > r = {r}")]
    ShapeTooLarge {
        tableau: String,
        size: usize,
        r: usize,
    },

    #[error("monomial {0} is not the initial monomial of a standard bitableau")]
    NotDecodable(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
