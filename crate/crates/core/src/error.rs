use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(
        "zero denominator: factor ({base} - {offset}) vanishes in a negative rising factorial"
    )]
    ZeroDenominator { base: String, offset: u64 },
    #[error("binomial with negative upper index {0}")]
    NegativeN(i64),
    #[error("argument out of domain: {0}")]
    DomainError(String),
    #[error("truncation order {order} is too short, need at least {needed}")]
    TruncationTooShort { order: usize, needed: usize },
    #[error("duplicate abscissa {0} in interpolation data")]
    DuplicateAbscissa(String),
    #[error("polynomial is not palindromic with center {0}/2")]
    NotPalindromic(usize),
    #[error("enumeration too large: k*r = {0} exceeds 16")]
    TooLarge(u64),
    #[error("nonzero coefficient at x^{found} beyond degree bound {bound}")]
    DegreeOverflow { found: usize, bound: usize },
    #[error("pole encountered: {0}")]
    PoleEncountered(String),
    #[error("routes disagree: {0}")]
    MismatchReported(String),
    #[error("interpolation inconsistent at held-out point {0}")]
    InterpolationInconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
