use thiserror::Error;

/// Errors raised by field construction, arithmetic and the residue queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("prime {0} is out of range (must satisfy 2 <= p < 2^31)")]
    PrimeOutOfRange(u64),

    #[error("operands belong to different fields")]
    FieldMismatch,

    #[error("zero is not invertible")]
    NotInvertible,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,

    #[error("constant polynomial has no irreducibility status")]
    ConstantPolynomial,

    #[error("extension degree must be at least 1")]
    ZeroDegree,

    #[error("modulus {0} is not irreducible")]
    Reducible(String),

    #[error("modulus {modulus} has degree {found}, expected {expected}")]
    DegreeMismatch {
        modulus: String,
        expected: usize,
        found: usize,
    },

    #[error("modulus {0} is not monic")]
    NotMonic(String),

    #[error("field size {p}^{n} does not fit below 2^63")]
    FieldTooLarge { p: u64, n: usize },

    #[error("{what}: size {size} exceeds cap {cap}")]
    CapExceeded { what: &'static str, size: u64, cap: u64 },

    #[error("r = {r} does not divide q - 1 = {order}")]
    NotDivisor { r: u64, order: u64 },

    #[error("r must be a positive integer")]
    ZeroExponent,

    #[error("operation is undefined for the zero element")]
    ZeroElement,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
