use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty token in `{0}`")]
    EmptyToken(String),
    #[error("invalid token `{0}`: expected a positive integer")]
    InvalidToken(String),
    #[error("duplicate value {0}")]
    DuplicateValue(usize),
    #[error("value {value} out of range 1..={len}")]
    ValueOutOfRange { value: usize, len: usize },
    #[error("transposition array entry t_{index} = {value} is outside 1..={index}")]
    MalformedTranspositionArray { index: usize, value: usize },
    #[error("t_{0} = {0} has no later entry equal to {0}; not the array of a derangement")]
    NotStarArray(usize),
    #[error("not a derangement: {0} is a fixed point")]
    NotDerangement(usize),
    #[error("insertion value {value} outside 1..={max}")]
    InsertionOutOfRange { value: usize, max: usize },
    #[error("fixed-point set is inconsistent with a derangement of length {len}: {detail}")]
    InconsistentFixedPoints { len: usize, detail: String },
    #[error("length {len} exceeds the configured cap {cap}")]
    CapExceeded { len: usize, cap: usize },
    #[error("invalid prefix: {0}")]
    InvalidPrefix(String),
    #[error("mesh pattern shading ({0}, {1}) lies outside the pattern grid")]
    ShadingOutOfRange(usize, usize),
    #[error("unknown statistic `{0}`")]
    UnknownStatistic(String),
    #[error("unknown symmetry `{0}`")]
    UnknownSymmetry(String),
    #[error("unknown bijection `{0}`")]
    UnknownBijection(String),
    #[error("{0} expects a {1}")]
    WrongDomain(&'static str, &'static str),
    #[error("unknown sequence `{0}`")]
    UnknownSequence(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("no derangement maps to {0}")]
    NoPreimage(String),
}
