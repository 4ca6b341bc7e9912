//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cyclotomic order mismatch: {left} vs {right}")]
    OrderMismatch { left: u64, right: u64 },
    #[error("root of unity of order {requested} is not contained in Q(zeta_{order})")]
    IncompatibleOrder { order: u64, requested: String },
    #[error("series is not invertible (no nonzero known coefficient)")]
    NotInvertible,
    #[error("result would have an empty window of known coefficients")]
    PrecisionUnderflow,
    #[error("coefficient of q^{exponent} is not known (series known below q^{precision})")]
    InsufficientPrecision { exponent: String, precision: String },
    #[error("exponent q^{exponent} is not representable at ramification {ramification}")]
    IrrepresentableExponent { exponent: String, ramification: u64 },
    #[error("weight t = {0} must be even")]
    OddT(u32),
    #[error("theta factor vanishes to the requested precision")]
    ThetaNotInvertible,
    #[error("geometric denominator in term n = {0} is not expandable")]
    NonExpandableDenominator(i64),
    #[error("result has a non-rational coefficient at q^{exponent}")]
    NonRationalResult { exponent: String },
    #[error("unsupported number of flavors: {0}")]
    UnsupportedFamily(u32),
    #[error("constraint violated: {0}")]
    ConstraintViolation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown series name: {0}")]
    UnknownForm(String),
}

pub type Result<T> = std::result::Result<T, Error>;
