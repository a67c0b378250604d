use thiserror::Error;

/// Errors produced by table construction and the verification harnesses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exponent {0} is invalid: every exponent must be at least 2")]
    InvalidExponent(i64),

    #[error("need at least two exponents, got {0}")]
    TooFewExponents(usize),

    #[error("empty degree range: {0}..{1}")]
    EmptyRange(i64, i64),

    #[error("Calabi-Yau type input (d0 = 0): localization and degree bounds are undefined")]
    CalabiYauType,

    #[error("degree {0} is positive: symplectic cohomology tables are only defined for degrees <= 0")]
    PositiveDegree(i64),

    #[error("degree {0} cannot be shifted into the nonpositive range: weight defect d0 = {1} is positive")]
    NotLocalizable(i64, i64),

    #[error("exponents {0:?} are not of the shape (k, m-k, 2, 2) required by the closed form")]
    NotSuspensionShape(Vec<i64>),

    #[error("parameters ({0}, {1}) must be coprime")]
    NotCoprime(i64, i64),

    #[error("parameter {name} = {value} out of range: {reason}")]
    BadParameter {
        name: &'static str,
        value: i64,
        reason: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
