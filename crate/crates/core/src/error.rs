use thiserror::Error;

/// Errors raised by the exact-arithmetic, p-adic and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("pole at evaluation point")]
    Pole,
    #[error("formal pole: substitution q -> -q^-{0} annihilates the denominator")]
    FormalPole(u32),
    #[error("non-unit series")]
    NonUnitSeries,
    #[error("parameter excluded by the generating function (u = 1)")]
    ExcludedParameter,
    #[error("brute-force cap exceeded: n = {n} > cap {cap}")]
    BruteForceCap { n: usize, cap: usize },
    #[error("not a p-adic integer at this prime")]
    NotPAdicInteger,
    #[error("non-invertible modulo p^M")]
    NonInvertible,
    #[error("did not stabilize by N = {0}")]
    DidNotStabilize(u32),
    #[error("invalid p-adic context: {0}")]
    InvalidContext(String),
    #[error("mismatched p-adic contexts")]
    ContextMismatch,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
