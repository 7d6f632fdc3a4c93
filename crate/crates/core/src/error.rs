use thiserror::Error;

/// Errors raised by the algebra, character and verification layers.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid group rank: SU({0}) requires N >= 2")]
    InvalidRank(i64),

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("negative exponent {0} is not allowed for a power")]
    NegativePower(i64),

    #[error("invalid exponent window: {0}")]
    InvalidWindow(String),

    #[error("invalid permutation of {rank} variables: {perm:?}")]
    InvalidPermutation { rank: usize, perm: Vec<usize> },

    #[error("invalid character spec: {0}")]
    InvalidCharacter(String),

    #[error("invalid recurrence spec: {0}")]
    InvalidRecurrence(String),

    #[error("recurrence produced a non-integral term at index {index}: {value}")]
    NonIntegralTerm { index: usize, value: String },

    #[error("recurrence denominator vanishes at n = {0}")]
    SingularRecurrence(i64),

    #[error("series square root needs constant term 1, found {0}")]
    UnsupportedBranch(String),

    #[error("series division: denominator valuation {den} exceeds numerator valuation {num}")]
    NonDivisible { num: usize, den: usize },

    #[error("division by the zero series")]
    DivisionByZero,

    #[error("truncation order {have} is too low, at least {need} is required")]
    InsufficientOrder { have: usize, need: usize },

    #[error("invalid ODE spec: {0}")]
    InvalidOde(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
