use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("monomial {monomial} has degree {degree}, expected {expected}")]
    Degree {
        monomial: String,
        degree: u32,
        expected: u32,
    },
    #[error("variable index {index} exceeds n = {n}")]
    Index { index: usize, n: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("ideal is not artinian (missing pure power of x{0})")]
    NotArtinian(usize),
    #[error("{generators} generators exceed the bound C(n+d-1, n-1) = {bound}")]
    BoundExceeded { generators: usize, bound: u64 },
    #[error("ideal is not a Togliatti system")]
    NotTogliatti,
    #[error("point set is empty")]
    EmptySet,
    #[error("face fails the lattice condition")]
    LatticeConditionUnmet,
    #[error("mu = {mu} outside [{low}, {high}]")]
    BoundViolation { mu: usize, low: u64, high: u64 },
    #[error("{candidates} candidates exceed the ceiling {ceiling}")]
    TooLarge { candidates: u128, ceiling: u128 },
    #[error("unsupported parameters: {0}")]
    UnsupportedParameters(String),
    #[error("fixture {file}: {message}")]
    Fixture { file: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
