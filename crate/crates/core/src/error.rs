//! Crate-wide error type.

use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("coefficient at index {0} is not finite")]
    NonFiniteCoefficient(usize),
    #[error("series orders differ: {0} vs {1}; re-truncate explicitly")]
    OrderMismatch(usize, usize),
    #[error("constant term has modulus {0:.3e}; logarithm undefined (weight vanishes at 0)")]
    ZeroConstantTerm(f64),
    #[error("|beta| = {0} is not 1 within 1e-12")]
    NonUnimodular(f64),
    #[error("|alpha| = {0} must be strictly less than 1")]
    AlphaOutsideDisc(f64),
    #[error("exp overflows: constant term has real part {0}")]
    ExpOverflow(f64),
    #[error("shift_down requires a vanishing constant term, got modulus {0:.3e}")]
    NonzeroConstantTerm(f64),
    #[error("{0}")]
    InvalidArgument(String),
    #[error("rotation is not aperiodic")]
    PeriodicRotation,
    #[error("rotation is not periodic")]
    AperiodicRotation,
    #[error("λ = e^{{2πi·{p}/{q}}} equals 1; excluded")]
    UnitLambda { p: i64, q: u64 },
    #[error("continued fraction ran out of precision at depth {depth}")]
    PrecisionExhausted { depth: usize },
    #[error("declared gamma {gamma:.6e} exceeds verified bound {gamma_hat:.6e} (q ≤ {q_check})")]
    GammaUnverified { gamma: f64, gamma_hat: f64, q_check: u64 },
    #[error("λ = {lambda} is within {dist:.3e} of the forced point m(0)βⁿ at n = {index}")]
    NearPole { index: usize, lambda: Complex64, dist: f64 },
    #[error("βμ = {0} coincides with m(0); rotation identity denominator vanishes")]
    RotationDenominator(Complex64),
    #[error("point spectrum is empty: weight vanishes at the origin")]
    ZeroAtOrigin,
    #[error("eigenfunction coefficient series is not convergent (confidence {0})")]
    ConditionFails(String),
    #[error("structural test failed: eigenvalue equation has no solution for this weight")]
    StructuralTestFailed,
    #[error("contour node {index} rejected: {reason}")]
    ContourRejected { index: usize, reason: String },
    #[error("boundary modulus unavailable for this weight; r = 1 norms need one")]
    BoundaryEvalUnavailable,
    #[error("zero locations unavailable for this weight")]
    ZerosUnavailable,
    #[error("weight is numerically zero on every sample")]
    ZeroWeight,
    #[error("phase unwrapping failed after {refinements} refinements (jump {jump:.3} rad)")]
    PhaseUnwrapFailed { refinements: usize, jump: f64 },
    #[error("zero of the weight within {0:.1e} of the sampling circle")]
    ZeroOnCircle(f64),
    #[error("Möbius map is not elliptic: fixed points on the boundary circle")]
    NotElliptic,
    #[error("coefficients do not define a disc automorphism: {0}")]
    NotAutomorphism(String),
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("invalid rotation: {0}")]
    InvalidRotation(String),
    #[error("Jensen profile unavailable: {0}")]
    ProfileUnavailable(String),
    #[error("io: {0}")]
    Io(String),
    #[error("json: {0}")]
    Json(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
