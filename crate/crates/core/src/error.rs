use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("odd-length binary vector ({0}) has no Gray preimage")]
    OddLength(usize),

    #[error("invalid symbol {symbol:?} at position {position}")]
    InvalidSymbol { position: usize, symbol: char },

    #[error("empty vector")]
    Empty,

    #[error("degree {0} is outside the supported range 2..=15")]
    DegreeOutOfRange(u32),

    #[error("polynomial {0} is not primitive over GF(2)")]
    NotPrimitive(String),

    #[error("Hensel lift failed: {0}")]
    LiftFailed(String),

    #[error("element {0} is a zero divisor and has no inverse")]
    ZeroDivisor(String),

    #[error("degenerate quadratic: linear coefficient is zero")]
    DegenerateQuadratic,

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("malformed information word: {0}")]
    MalformedInfo(String),

    #[error("MacWilliams transform produced a non-enumerator: {0}")]
    MacWilliams(String),

    #[error("code too large to enumerate: {words} words exceeds cap {cap}")]
    TooLarge { words: u128, cap: u128 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("length {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("spectrum is not integral: {0}")]
    NonIntegralSpectrum(String),
}

pub type Result<T> = std::result::Result<T, Error>;
