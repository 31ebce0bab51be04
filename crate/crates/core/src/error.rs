use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a supported prime modulus")]
    InvalidModulus(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("moduli differ: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("matrix is not p-nilpotent (A^{0} != 0)")]
    NotPNilpotent(u32),
    #[error("operands live in different polynomial rings")]
    RingMismatch,
    #[error("zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("input is not homogeneous: {0}")]
    NonHomogeneous(String),
    #[error("grading error: {0}")]
    Grading(String),
    #[error("not a submodule: {0}")]
    NotASubmodule(String),
    #[error("index out of range: {0}")]
    Range(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("basis is not a restricted subalgebra: {0}")]
    NotRestrictedSubalgebra(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("point is not on the nullcone: {0}")]
    NotOnNullcone(String),
    #[error("the zero vector is not a point of projective space")]
    ZeroPoint,
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("group schemes differ")]
    GroupMismatch,
    #[error("saturation did not stabilize after {0} iterations")]
    SaturationWatchdog(usize),
    #[error("computation too large: {0}")]
    TooLarge(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
