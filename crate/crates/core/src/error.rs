use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("division leaves a remainder")]
    InexactDivision,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("coefficients too large for rational-root extraction")]
    CoefficientTooLarge,
    #[error("a denominator survived where a polynomial was expected: {0}")]
    InternalDenominator(String),
    #[error("polynomial is not integer-valued: {0}")]
    NotIntegerValued(String),
    #[error("series truncation orders differ: {0} vs {1}")]
    TruncationMismatch(usize, usize),
    #[error("series constant term is not invertible")]
    NotInvertible,
    #[error("geometric factor with exponent 0")]
    ZeroExponent,
    #[error("need at least {needed} samples, got {got}")]
    TooFewSamples { needed: usize, got: usize },
    #[error("duplicate interpolation node {0}")]
    DuplicateNode(i64),
    #[error("samples inconsistent with the degree bound at node {node}")]
    InconsistentSamples { node: i64 },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("rank {n} too small for a weight with {needed} nonzero rows")]
    RankTooSmall { n: usize, needed: usize },
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("weight is not dominant: {0:?}")]
    NotDominant(Vec<i64>),
    #[error("weight does not lie in the root lattice: {0:?}")]
    NotTraceless(Vec<i64>),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("boundary mismatch: {0} vs {1}")]
    BoundaryMismatch(String, String),
    #[error("not an endomorphism: {0} -> {1}")]
    NotEndomorphism(String, String),
    #[error("family mismatch")]
    FamilyMismatch,
    #[error("no stabilization up to rank {cap}")]
    NoStabilization { cap: usize },
    #[error("{0} is not simple; the scalar central charge formula does not apply")]
    NotSimple(String),
    #[error("level is identically critical")]
    CriticalLevel,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
