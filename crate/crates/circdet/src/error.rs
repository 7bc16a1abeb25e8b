use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument must be positive, got {0}")]
    NonPositive(i64),
    #[error("{n} has no inverse modulo {modulus}")]
    NotInvertible { n: i64, modulus: u64 },
    #[error("weighted part sum is {got}, expected {p}")]
    WeightedSum { p: usize, got: usize },
    #[error("{what}: {num} is not divisible by {den}")]
    NotDivisible {
        what: &'static str,
        num: String,
        den: String,
    },
    #[error("invalid index set: {0}")]
    InvalidIndexSet(String),
    #[error("unsupported shape: {0}")]
    Shape(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
