use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero b-function")]
    ZeroBFunction,
    #[error("b-function degree cap exceeded (cap {0})")]
    DegreeCapExceeded(usize),
    #[error("input not holonomic (characteristic dimension {dim}, expected {n})")]
    NotHolonomic { dim: usize, n: usize },
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("no rational solutions: b-function for factor {0} has no integer root")]
    NoRationalSolutions(String),
    #[error("partial closure not holonomic; supply a manual closure")]
    ClosureNotHolonomic,
    #[error("factorization incomplete: residual factor {0} is not a product of linear factors; pass --factors")]
    FactorizationIncomplete(String),
    #[error("localization presentation required")]
    LocalizationRequired,
    #[error("iteration cap reached after filtration level {0} before finding all solutions")]
    IterationCap(usize),
    #[error("found {found} independent solutions but {expected} were requested")]
    TooManySolutions { found: usize, expected: usize },
    #[error("zero input: {0}")]
    ZeroInput(&'static str),
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("arithmetic: {0}")]
    Arithmetic(String),
}

pub type Result<T> = std::result::Result<T, Error>;
