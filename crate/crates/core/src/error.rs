use thiserror::Error;

use crate::codec::ValidationReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("crossing {0} declared more than once")]
    DuplicateCrossing(u32),

    #[error("line {line}: crossing {id} is not declared")]
    UnknownCrossing { line: usize, id: u32 },

    #[error("invalid diagram: {}", .0.summary())]
    Invalid(ValidationReport),

    #[error("component index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("component indices must be distinct")]
    EqualIndices,

    #[error("expected indices i < j, got {0} and {1}")]
    IndexOrder(usize, usize),

    #[error("expected a {expected} diagram")]
    KindMismatch { expected: &'static str },

    #[error("linking number of components {i} and {j} is half of an odd signed sum ({sum})")]
    OddLinkingSum { i: usize, j: usize, sum: i64 },

    #[error("expected a knot diagram (one component), got {0} components")]
    NotAKnot(usize),

    #[error("template has {got} strands, expected {expected}")]
    StrandCount { expected: usize, got: usize },

    #[error("empty component selection")]
    EmptySelection,

    #[error("Alexander determinant does not evaluate to a unit at t = 1 (got {0})")]
    AlexanderNotUnit(i128),

    #[error("Alexander polynomial is not symmetric: {0}")]
    AlexanderAsymmetric(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("series with constant term {0} cannot be inverted")]
    NonUnitSeries(i64),

    #[error("Milnor index sequence of length {len} exceeds degree bound {degree}")]
    SequenceTooLong { len: usize, degree: usize },

    #[error("Milnor index sequence must have length at least 2")]
    SequenceTooShort,

    #[error("arc series did not stabilise after {0} passes")]
    NoConvergence(usize),

    #[error("profiles have different component counts ({0} vs {1})")]
    SizeMismatch(usize, usize),

    #[error("matrix shape: {0}")]
    Shape(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),

    #[error("input is not Z/2-algebraically split: lk({i},{j}) = {lk} is odd")]
    OddLinking { i: usize, j: usize, lk: i64 },

    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },

    #[error("{0}")]
    Io(#[from] std::io::Error),

    #[error("{0}")]
    Json(#[from] serde_json::Error),
}
