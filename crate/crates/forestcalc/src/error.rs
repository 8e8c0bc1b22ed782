use thiserror::Error;

/// Errors produced by the library. Input parse errors carry a byte position
/// and a description of what was expected there.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at position {position}: expected {expected}")]
    Parse { position: usize, expected: String },
    #[error("unbound variable x{0}")]
    UnboundVariable(i32),
    #[error("no leading term: the zero polynomial has none")]
    NoLeadingTerm,
    #[error("negative support: permutation moves an index < 1")]
    NegativeSupport,
    #[error("not an LBS labeling")]
    NotLbs,
    #[error("not injective: letter {0} repeats")]
    NotInjective(String),
    #[error("shape mismatch between the two labeled forests")]
    ShapeMismatch,
    #[error("not a terminal node: {0}")]
    NotTerminal(i32),
    #[error("length must be n-1: got length {len} with n = {n}")]
    LengthMustBeNMinusOne { len: usize, n: usize },
    #[error("degree must be n-1: got degree {degree} with n = {n}")]
    DegreeMustBeNMinusOne { degree: usize, n: usize },
    #[error("polynomial must be homogeneous")]
    NotHomogeneous,
    #[error("variable x{var} out of range: at most x{max} allowed")]
    VariableOutOfRange { var: i32, max: i32 },
    #[error("malformed content vector: {0}")]
    MalformedContent(String),
    #[error("invalid compatible pair: {0}")]
    InvalidCompatiblePair(String),
    #[error("invalid permutation window: {0}")]
    InvalidPermutation(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
