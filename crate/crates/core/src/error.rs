use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty degree sequence")]
    EmptyInput,
    #[error("degree {0} is not positive")]
    NonPositiveTerm(i64),
    #[error("cannot parse {0:?} as a degree")]
    Parse(String),
    #[error("{0:?} is not a sub-multiset of the sequence")]
    NotSubMultiset(Vec<u32>),
    #[error("invalid GHH selection: {0}")]
    InvalidSelection(String),
    #[error("sequence is not graphical")]
    NotGraphical,
    #[error("oracle bound exceeded: n = {n} > {bound}")]
    OracleBoundExceeded { n: usize, bound: usize },
    #[error("degree sum {0} is odd")]
    OddSum(u64),
    #[error("no member with the requested property exists for parameter {0}")]
    NoMember(u32),
    #[error("random generation failed after {0} attempts")]
    GenerationFailure(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("time budget exhausted")]
    Timeout,
    #[error("cache i/o: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
