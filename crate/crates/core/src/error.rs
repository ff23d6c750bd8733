use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed Cartan type `{0}`: expected a letter A-G followed by a rank")]
    MalformedCartanType(String),
    #[error("rank {rank} is not valid for type {letter}")]
    InvalidRank { letter: char, rank: usize },
    #[error("invalid parabolic subset: {0}")]
    InvalidParabolic(String),
    #[error("weight {0:?} has a negative coordinate")]
    NegativeCoordinate(Vec<i64>),
    #[error("weight has length {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("characters live over different bases ({0} vs {1})")]
    BasisMismatch(String, String),
    #[error("operation needs the SL2 fundamental-weight basis, got {0}")]
    WrongBasis(String),
    #[error("character is not symmetric under w -> -w")]
    NotSymmetric,
    #[error("character is not the character of a module (negative simple multiplicity at L({0}))")]
    NotModuleCharacter(i64),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("coordinate {coord} exceeds the brute-force limit {limit}")]
    LimitExceeded { coord: i64, limit: i64 },
    #[error("{0}")]
    InvalidArgument(String),
}

impl Error {
    /// Errors caused by malformed or out-of-range user input rather than
    /// by a failed computation.
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::Overflow | Error::NotModuleCharacter(_) | Error::NotSymmetric
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
