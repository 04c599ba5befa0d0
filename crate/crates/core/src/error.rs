use std::fmt;

use thiserror::Error;

use crate::subset::CarrierSubset;

/// A positioned syntax error from one of the text formats.
///
/// `line` and `column` are 1-based and point at the first offending token.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed grade `{0}`")]
    MalformedGrade(String),
    #[error("grade `{0}` lies outside [0, 1]")]
    OutOfRange(String),
    #[error("grade arithmetic overflowed 64 bits")]
    GradeOverflow,

    #[error("carrier order {0} is not supported (must be between 1 and {max})", max = crate::subset::MAX_ORDER)]
    UnsupportedOrder(usize),
    #[error("cell ({0}, {1}) is empty")]
    EmptyCell(usize, usize),
    #[error("subset {subset} is not contained in a carrier of order {order}")]
    SubsetOutOfRange { subset: CarrierSubset, order: usize },
    #[error("expected {expected} table cells, got {actual}")]
    TableShape { expected: usize, actual: usize },
    #[error("subset is empty")]
    EmptySubset,
    #[error("order {order} exceeds the enumeration limit {limit}")]
    OrderLimitExceeded { order: usize, limit: usize },
    #[error("hypergroupoid is not a hyperquasigroup (reproducibility fails at {0})")]
    NotAHyperquasigroup(usize),
    #[error("{0} is not a sub-hyperquasigroup")]
    NotASubHyperquasigroup(CarrierSubset),

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("membership plus non-membership exceeds 1 at element {0}")]
    ConstraintViolated(usize),
    #[error("parameter order violated: {0}")]
    ParameterOrderViolated(String),
    #[error("level chain hypothesis violated: {0}")]
    ChainHypothesisViolated(String),
    #[error("member {0} of the family is not an intuitionistic fuzzy sub-hyperquasigroup")]
    NotAnIfsh(usize),
    #[error("alpha must lie strictly between 0 and 1")]
    AlphaOnBoundary,

    #[error("quotient product is ill-defined for classes {0} and {1}")]
    IllDefinedProduct(usize, usize),
    #[error("table is not a Latin square: {0}")]
    NotALatinSquare(String),

    #[error("no acceptable structure found in {0} attempts")]
    SamplingExhausted(u64),

    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
