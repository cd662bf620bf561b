use thiserror::Error;

/// Errors raised by constructors and operations across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime >= 3")]
    NonPrime(u64),
    #[error("p = {0} is not congruent to 1 mod 3, no primitive cube root of unity")]
    NoCubeRoot(u64),
    #[error("{p} is not a quadratic residue modulo {q}")]
    NotResidue { p: u64, q: u64 },
    #[error("theta = {theta} does not square to {expected} mod {p}")]
    BadTheta { theta: u64, expected: u64, p: u64 },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("p = {p} divides n = {n}; repeated-root lengths are not supported")]
    RepeatedRoots { n: usize, p: u64 },
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("element is not a unit")]
    NotAUnit,
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("field mismatch: p = {0} vs p = {1}")]
    FieldMismatch(u64, u64),
    #[error("polynomial does not divide {0}")]
    NotADivisor(String),
    #[error("polynomial is not idempotent modulo x^{0} - 1")]
    NotIdempotent(usize),
    #[error("multiplier {s} is not coprime to {q}")]
    NotCoprime { s: i64, q: usize },
    #[error("enumeration of {size} codewords exceeds cap {cap}")]
    TooLarge { size: String, cap: u64 },
    #[error("polynomial degree {degree} is not below {bound}")]
    DegreeOverflow { degree: usize, bound: usize },
    #[error("bad QR code label {0:?}")]
    BadLabel(String),
    #[error("bad QR mask {0:?}")]
    BadMask(String),
    #[error("invalid monomial map: {0}")]
    BadMonomial(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
