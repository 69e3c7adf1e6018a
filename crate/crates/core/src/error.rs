use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("rank must be at least 1")]
    InvalidRank,
    #[error("module index {module} exceeds rank {rank}")]
    ModuleOutOfRange { module: usize, rank: usize },
    #[error("color {color} outside 1..={rank}")]
    ColorOutOfRange { color: usize, rank: usize },
    #[error("factor of color {0} must have depth at least 1")]
    NonPositiveDepth(usize),
    #[error("malformed monomial token `{0}`")]
    MalformedToken(String),
    #[error("malformed weight `{0}`")]
    MalformedWeight(String),
    #[error("weight has {found} entries, expected {expected}")]
    WeightLength { expected: usize, found: usize },
    #[error("division by a series with zero constant term")]
    NonUnitDivisor,
    #[error("malformed coefficient `{0}`")]
    MalformedCoefficient(String),
    #[error("inconsistent sector: {0}")]
    Inconsistent(String),
    #[error("cache: {0}")]
    Cache(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
