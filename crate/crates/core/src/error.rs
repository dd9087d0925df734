use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("element is not in the group: {0}")]
    NotAnElement(String),
    #[error("group order exceeds cap of {cap}")]
    CapExceeded { cap: usize },
    #[error("{what} of size {size} exceeds cap of {cap}")]
    SizeCapExceeded { what: &'static str, size: usize, cap: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("subgroup is not abelian")]
    NotAbelian,
    #[error("characters do not generate the character group")]
    NotGenerating,
    #[error("Y is not a subgroup of Z_G(H)/H")]
    YNotInCentralizerQuotient,
    #[error("bad index: {0}")]
    BadIndex(String),
    #[error("transcendence degree {trdeg} exceeds n - j = {bound}")]
    TrdegTooLarge { trdeg: usize, bound: isize },
    #[error("character sequence of length {0} is too long for exhaustive subset search")]
    TooLong(usize),
    #[error("empty character sequence")]
    EmptyBeta,
    #[error("not a divisor symbol: {0}")]
    NotDivisorSymbol(String),
    #[error("symbol not in presentation basis: {0}")]
    UnknownSymbol(String),
    #[error("action is not generically free")]
    NotGenericallyFree,
    #[error("inconsistent charts: {0}")]
    InconsistentCharts(String),
    #[error("invalid fan: {0}")]
    InvalidFan(String),
    #[error("not a cone of the fan: {0:?}")]
    NotACone(Vec<usize>),
    #[error("cone {0:?} has fewer than two rays")]
    RayCone(Vec<usize>),
    #[error("standardization failed to decrease the divisorial index ({previous} -> {next})")]
    NonTermination { previous: usize, next: usize },
    #[error("invalid filter: {0}")]
    InvalidFilter(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
