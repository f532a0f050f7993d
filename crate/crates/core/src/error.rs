use thiserror::Error;

/// Errors raised by the constructions and checkers of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("leading coefficient of the series is not invertible")]
    NonInvertibleLeadingTerm,

    #[error("matrices do not define a representation: {0}")]
    NotARepresentation(String),

    #[error("invalid exterior degree {degree} for n = {n}")]
    InvalidDegree { degree: usize, n: usize },

    #[error("modules have different rank: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("weight {0} is not generic (some label difference is an integer)")]
    NonGenericWeight(String),

    #[error("invalid degree sequence: {0}")]
    InvalidDegreeSequence(String),

    #[error("pole encountered at t = {0}")]
    PoleEncountered(String),

    #[error("weight {0} is not polynomial")]
    NotPolynomial(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("cannot parse {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
