use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("operands live over different rings")]
    RingMismatch,

    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("exponent overflow in monomial multiplication")]
    ExponentOverflow,

    #[error("{0} is not a prime modulus")]
    NotPrime(u64),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("∂∂ ≠ 0 at degree {degree}: entry ({row}, {col}) of ∂_{lower}∘∂_{degree} is nonzero", lower = degree - 1)]
    NonZeroComposition { degree: i64, row: usize, col: usize },

    #[error("Koszul complex needs at least one element")]
    EmptySequence,

    #[error("{0}")]
    Parse(#[from] ParseError),

    #[error("Gröbner basis computation exceeded its time budget")]
    Timeout,

    #[error("i/o error: {0}")]
    Io(String),

    #[error("internal error: {0}")]
    Internal(String),
}

/// A syntax error with a 1-based position in the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
