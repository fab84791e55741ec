use thiserror::Error;

/// Errors raised by the exact-arithmetic layers and the verification harness.
///
/// Verification *failures* are never errors: they are verdicts carried in a
/// [`crate::congruence::VerificationReport`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator is not invertible modulo {0}")]
    DenominatorNotInvertible(String),
    #[error("p-adic valuation of zero is undefined")]
    ZeroInput,
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes under substitution {0}")]
    DenominatorVanishes(String),
    #[error("not expandable as a power series: {0}")]
    NotExpandable(String),
    #[error("zero has no inverse in Q[q]/Phi_{0}")]
    ZeroInverse(u64),
    #[error("pole at a primitive {0}-th root of unity")]
    PoleAtRootOfUnity(u64),
    #[error("constraint violated: {0}")]
    ConstraintViolated(String),
    #[error("modulus parts are not pairwise coprime: {0}")]
    ModulusPartsNotCoprime(String),
    #[error("value is a reciprocal of zero (infinite)")]
    ZeroReciprocal,
    #[error("unknown identifier `{0}`")]
    UnknownId(String),
    #[error("{0}")]
    Usage(String),
    #[error("non-finite floating value")]
    NonFinite,
    #[error("i/o error at {path}: {message}")]
    Io { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
