use thiserror::Error;

/// Errors raised by the descent toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero input: {0}")]
    Zero(&'static str),
    #[error("division by zero polynomial")]
    DivisionByZeroPoly,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("incompatible label universes")]
    IncompatibleLabels,
    #[error("point is not on the curve: {0}")]
    OffCurve(String),
    #[error("singular curve: {0}")]
    Singular(String),
    #[error("bad specialization at {tau}: factor {factor} vanishes")]
    BadSpecialization { tau: String, factor: String },
    #[error("invalid diophantine quadruple: {0}")]
    InvalidQuadruple(String),
    #[error("excluded parameter t = {0}")]
    ExcludedParameter(String),
    #[error("bad prime {prime}: {reason}")]
    BadPrime { prime: u64, reason: String },
    #[error("not a square: {0}")]
    NotSquare(String),
    #[error("cover construction failed: {0}")]
    Cover(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
