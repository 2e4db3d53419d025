use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("matrix entry count {len} is not a perfect square of a positive dimension")]
    BadShape { len: usize },
    #[error("unknown subsystem label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate subsystem label `{0}`")]
    DuplicateLabel(String),
    #[error("empty label selection")]
    EmptySelection,
    #[error("matrix is not Hermitian (max |h - h^dagger| = {0:e})")]
    NotHermitian(f64),
    #[error("matrix is not positive semidefinite (eigenvalue {0:e})")]
    NotPositive(f64),
    #[error("trace {0} differs from 1")]
    BadTrace(f64),
    #[error("determinant of a {0}x{0} matrix is not supported (3 or 4 only)")]
    UnsupportedDimension(usize),
    #[error("state is not normalized (squared norm {0})")]
    NotNormalized(f64),
    #[error("squared amplitudes must sum to 1 (got {0})")]
    BadNormalization(f64),
    #[error("degenerate W-type corner: {0} is exactly 0 or 1")]
    DegenerateCorner(&'static str),
    #[error("parameter {name} = {value} outside the open interval (0, 1)")]
    OutOfRange { name: &'static str, value: f64 },
    #[error("no sign change on [{lo}, {hi}]: f(lo) = {f_lo:e}, f(hi) = {f_hi:e}")]
    NoSignChange {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("csv: {0}")]
    Csv(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Csv(e.to_string())
    }
}
