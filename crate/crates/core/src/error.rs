use alloc::string::String;
use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

/// Failure modes shared by every module.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("evaluation at a pole: {0}")]
    Pole(String),
    #[error("division does not cancel: {0}")]
    NonCancellation(String),
    #[error("unknown knot `{0}`")]
    UnknownKnot(String),
    #[error("Habiro data for `{knot}` stops at k = {available}, needed k = {needed}")]
    InsufficientData {
        knot: String,
        needed: usize,
        available: usize,
    },
    #[error("sequence undefined at index {0}")]
    UndefinedIndex(i64),
    #[error("non-integral exponent {0}")]
    NonIntegralExponent(String),
    #[error("constraint violated: {0}")]
    Constraint(String),
    #[error("expected a polynomial of degree {expected}")]
    WrongDegree { expected: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
}
