use thiserror::Error;

/// Error type shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree must be positive")]
    ZeroDegree,
    #[error("ambient dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("series have different variable sets or truncation bounds")]
    VariableMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("exponent {exponent} of `{var}` exceeds truncation bound {bound}")]
    ExponentOutOfBounds {
        var: String,
        exponent: u32,
        bound: u32,
    },
    #[error("matrix is not square")]
    NonSquareMatrix,
    #[error("expected {expected} points, got {got}")]
    WrongPointCount { expected: usize, got: usize },
    #[error("degenerate configuration: points are not in general position")]
    DegenerateConfiguration,
    #[error("count N_{0} came out non-integral; this indicates a bug")]
    NonIntegerCount(u32),
    #[error("index {index} out of range for basis of size {size}")]
    BadBasisIndex { index: usize, size: usize },
}
