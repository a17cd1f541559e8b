use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),

    #[error("negative tropical value {0}")]
    NegativeTropValue(String),

    #[error("zero raised to the negative power {0}")]
    ZeroToNegativePower(i64),

    #[error("empty hypersum")]
    EmptyHypersum,

    #[error("syntax error at position {position}: {message} (expected {expected})")]
    Syntax { position: usize, message: String, expected: String },

    #[error("unknown variable {name:?} at position {position}")]
    UnknownVariable { name: String, position: usize },

    #[error("negative exponent at position {position} in a non-Laurent signature")]
    NegativeExponent { position: usize },

    #[error("signature mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    #[error("generator {0} is the zero polynomial")]
    ZeroGenerator(usize),

    #[error("presentation has no valuation attached")]
    MissingValuation,

    #[error("unsupported relation shape: {0}")]
    UnsupportedRelationShape(String),

    #[error("malformed proof step {step}: {reason}")]
    MalformedStep { step: usize, reason: String },

    #[error("presentation lacks the axiom {0}")]
    MissingAxiom(&'static str),

    #[error("no generator of the presentation matches the bend relation {0}")]
    NoMatchingGenerator(String),

    #[error("invalid seminorm descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("malformed input: {0}")]
    Format(String),
}
