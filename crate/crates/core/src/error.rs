use thiserror::Error;

use crate::algebra::TritVec;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("index {index} out of range (must be < {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("invalid ternary digit {0}")]
    InvalidDigit(u8),
    #[error("extension degree {0} not supported (1..=8)")]
    UnsupportedDegree(usize),
    #[error("extension degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("spread parameter t={0} not supported (1..=4)")]
    SpreadOutOfRange(usize),
    #[error("invalid partial spread: {0}")]
    InvalidSpread(String),
    #[error("duplicate spread index {0}")]
    DuplicateIndex(usize),
    #[error("index list of length {0} must be even and non-empty")]
    OddIndexCount(usize),
    #[error("pair indicator needs distinct indices, got {0} twice")]
    SameIndex(usize),
    #[error("s={s} is not admissible here (allowed 1..={max})")]
    InadmissibleS { s: usize, max: usize },
    #[error("ambient dimension n={0} must be even and positive")]
    OddDimension(usize),
    #[error("function is linear: f(x) = {0}.x")]
    LinearFunction(TritVec),
    #[error("operation needs a characteristic or ternary spread function")]
    CustomFamily,
    #[error("spread is not full; spectrum cases need all 3^t+1 members")]
    PartialSpreadOnly,
    #[error("2Re = {twice_re} does not give an integral weight for n={n}")]
    NonIntegralWeight { twice_re: i64, n: usize },
    #[error("weight distribution has no nonzero weight")]
    EmptyDistribution,
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
