use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("{dividend} is not divisible by {divisor} over Z[t, t^-1]")]
    NonExactDivision { dividend: String, divisor: String },
    #[error("recursion leading coefficient vanishes at n = {n}")]
    ZeroLeadingCoefficient { n: i64 },
    #[error("index {index} outside the admissible range [{lo}, {hi}]")]
    IndexOutOfRange { index: i64, lo: i64, hi: i64 },
    #[error("no peripheral image is known for the curve ({a},{b}); only slopes with first coordinate 0 or 1 are supported")]
    UnsupportedCurve { a: i64, b: i64 },
    #[error("knot parameter p = {0} is not supported here (need p >= 1)")]
    InvalidParameter(i64),
    #[error("contracted element is not in the quantum plane: {0}")]
    NotPolynomial(String),
    #[error("oracle size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("unknown verification suite {0:?}")]
    UnknownSuite(String),
    #[error("malformed braid word: {0}")]
    InvalidBraid(String),
    #[error("malformed input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
