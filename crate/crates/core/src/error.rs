use thiserror::Error;

use crate::words::Word;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty word")]
    EmptyWord,
    #[error("letters must be positive integers, found {0}")]
    InvalidLetter(i64),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("not a partition: {0:?}")]
    InvalidPartition(Vec<usize>),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("tableau is not standard")]
    NonStandardTableau,
    #[error("word set is not closed under rotation: missing a rotation of {0}")]
    NotRotationClosed(Word),
    #[error("content multiset not symmetric: content {content:?} counted {found}, expected {expected}")]
    NotSymmetric {
        content: Vec<usize>,
        expected: u64,
        found: u64,
    },
    #[error("divisibility violated: {0}")]
    Divisibility(String),
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("non-integral value where an integer is guaranteed: {0}")]
    NonIntegral(String),
    #[error("cache: {0}")]
    Cache(String),
}
