use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0}: argument must be positive")]
    ZeroArgument(&'static str),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid weighted projective space: {0}")]
    InvalidWps(String),

    #[error("coefficient 1 - 1/{0} is not an admissible standard coefficient")]
    InvalidCoefficient(u64),

    #[error("polynomial has {found} exponent slots, ambient space has {expected}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("zero polynomial where a nonzero equation is required")]
    ZeroPolynomial,

    #[error("not quasi-homogeneous: monomial degrees {first} and {other} differ")]
    NotQuasiHomogeneous { first: u64, other: u64 },

    #[error("weighted projective space is not well-formed")]
    NotWellFormed,

    #[error("K_X + B has nonzero degree {0}")]
    NonzeroDegree(String),

    #[error("leaf does not match strategy {strategy}: {reason}")]
    ShapeMismatch { strategy: String, reason: String },

    #[error("unknown klt strategy tag {0:?}")]
    UnknownStrategy(String),

    #[error("curve of degree {0} exceeds the supported degree 3")]
    DegreeTooHigh(u32),

    #[error("invalid JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("malformed certificate: {0}")]
    Malformed(String),
}
