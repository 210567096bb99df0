//! Error type shared by all modules.

use crate::ring::Signature;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("signature mismatch: {left:?} vs {right:?}")]
    SignatureMismatch { left: Signature, right: Signature },

    #[error("exponential prefactor mismatch: {left} vs {right}")]
    PrefactorMismatch { left: String, right: String },

    #[error("azimuthal phase mismatch: {left} vs {right}")]
    PhaseMismatch { left: i64, right: i64 },

    #[error("operator {op} expects a {expected:?} expression, got {got:?}")]
    OperatorSignature {
        op: String,
        expected: Signature,
        got: Signature,
    },

    #[error("invalid Legendre index: l = {l}, m = {m} (need 0 <= m <= l)")]
    InvalidLegendreIndex { l: u32, m: u32 },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("negative power of c is not representable")]
    NegativeCosPower,

    #[error("expression is already trigonometric; complexification maps the hyperbolic ring only")]
    AlreadyTrigonometric,

    #[error("quotient is not a constant: {0}")]
    NonConstantQuotient(String),

    #[error("exact division failed: {0}")]
    ExactDivisionFailed(String),

    #[error("grid of {n} points is too small for a stencil of order {order}")]
    GridTooSmall { n: usize, order: usize },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("operator coupling is not a numeric constant: {0}")]
    NonNumericCoupling(String),

    #[error("zero function passed where a nonzero one is required")]
    ZeroFunction,

    #[error("evaluation point is singular: {0}")]
    SingularPoint(String),

    #[error("expected real coefficients after normalization, found {0}")]
    NonRealCoefficient(String),

    #[error("invalid mesh request: {0}")]
    InvalidMesh(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
