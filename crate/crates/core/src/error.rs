use thiserror::Error;

/// Errors produced by construction, parsing, and the reduction/census operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ill-formed monomial set: {0}")]
    IllFormed(String),

    #[error(
        "monomial {monomial} is not square-free: variable x{variable} has exponent {exponent}"
    )]
    NotSquareFree {
        variable: usize,
        monomial: String,
        exponent: u8,
    },

    #[error("variable x{0} is not a leaf: a leaf has incidence degree 1 and exponent 1 in its unique member")]
    NotALeaf(usize),

    #[error("variable x{0} is not a root: a root divides exactly n-1 of the n members")]
    NotARoot(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("census query out of range: {0}")]
    QueryOutOfRange(String),

    #[error("parse error at byte {position} in token {token:?}: {message}")]
    Parse {
        position: usize,
        token: String,
        message: String,
    },

    #[error("duality cross-check failed: {0}")]
    DualityMismatch(String),
}
