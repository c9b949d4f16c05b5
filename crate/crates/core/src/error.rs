use thiserror::Error;

/// Errors raised by the exact-arithmetic kernel and the verifiers built on it.
///
/// Verification failures are never errors; they are reported as data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left_rows}x{left_cols} times {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix shape {rows}x{cols} does not match {len} entries")]
    BadShape { rows: usize, cols: usize, len: usize },
    #[error("unsupported sequence index {0}")]
    UnsupportedIndex(i64),
    #[error("entry ({i}, {j}) of an {n}x{n} power has no closed form")]
    OutOfCoverage { n: usize, i: usize, j: usize },
    #[error("unknown matrix family {0:?}")]
    UnknownFamily(String),
    #[error("recurrence parameters must not all be zero")]
    DegenerateParams,
    #[error("dimension must be at least {min}, got {got}")]
    DimensionTooSmall { min: usize, got: usize },
    #[error("internal error: inexact division {0}")]
    InexactDivision(String),
    #[error("{0} is not a prime")]
    NotPrime(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
