use thiserror::Error;

/// Errors raised by field construction, code construction, verification and decoding.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of order {p}^{e} does not fit in 64 bits")]
    FieldTooLarge { p: u64, e: u32 },
    #[error("tower over a base field of order {0} would exceed 64-bit encodings")]
    TowerTooLarge(u64),
    #[error("malformed modulus: {0}")]
    MalformedModulus(String),
    #[error("polynomial {0} is reducible")]
    ReducibleModulus(String),
    #[error("polynomial degree must be at least {min}, got {degree}")]
    DegreeTooSmall { degree: usize, min: usize },
    #[error("value {value} is out of range for a field of order {order}")]
    ElementOutOfRange { value: u64, order: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("code length {n} exceeds the maximum {max} for the {kind} construction over GF({q})")]
    LengthExceeded {
        n: usize,
        max: usize,
        kind: &'static str,
        q: u64,
    },
    #[error("code length must be at least {min}, got {n}")]
    LengthTooSmall { n: usize, min: usize },
    #[error("the square construction needs odd characteristic, got characteristic 2")]
    UnsupportedCharacteristic,
    #[error("ordering is not a permutation of 0..{0}")]
    InvalidPermutation(usize),
    #[error("evaluation points {0} and {1} coincide")]
    DuplicateEvaluationPoint(usize, usize),
    #[error("expected {expected} coefficients, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("code dimension {0} is not supported here (k = 2 required)")]
    UnsupportedDimension(usize),
    #[error("index vectors have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("index vector {0:?} is not strictly increasing")]
    NotIncreasing(Vec<usize>),
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("code carries no construction provenance")]
    MissingProvenance,
    #[error("limit must be at least 1")]
    InvalidLimit,
    #[error("search space of {size} messages exceeds the limit of {limit}")]
    SearchSpaceTooLarge { size: u128, limit: u128 },
    #[error("cannot delete {t_del} symbols from a word of length {n}")]
    TooManyDeletions { t_del: usize, n: usize },
    #[error("edit position {position} is invalid for a word of length {len}")]
    InvalidEditPosition { position: usize, len: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
