//! Error type shared by all modules.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("division by zero in the number field")]
    DivisionByZero,
    #[error("minimal polynomial is not irreducible over Q: {0}")]
    Reducible(String),
    #[error("not totally real: {found} of {degree} roots are real")]
    NotTotallyReal { found: usize, degree: usize },
    #[error("embedding approximation does not satisfy the minimal polynomial")]
    BadEmbedding,
    #[error("field is not Galois (conjugates are not expressible in the field)")]
    NotGalois,
    #[error("could not separate an embedding value from zero within the precision cap")]
    UnresolvableSign,
    #[error("operands belong to different number fields")]
    FieldMismatch,
    #[error("operands have different coefficient domains")]
    DomainMismatch,
    #[error("coefficient sum is zero: no unit-trace representative")]
    TraceZero,
    #[error("operand is not normalized to unit coefficient sum")]
    NotNormalized,
    #[error("multiplicative shift by zero is undefined")]
    ZeroShift,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("series truncations differ: {0} vs {1}")]
    TruncationMismatch(usize, usize),
    #[error("series is not a unit (leading coefficient is zero)")]
    NonUnit,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("requested size {got} exceeds the cap {cap}")]
    CapExceeded { cap: usize, got: usize },
    #[error("modulus {0} is not a multiple of {1}")]
    NotMultiple(u64, u64),
    #[error("prime bounds differ: {0} vs {1}")]
    BoundMismatch(u64, u64),
    #[error("element has non-integer exponents in its support")]
    NonIntegerSupport,
    #[error("exponent is not a character of the chosen torus")]
    NotLatticeCharacter,
    #[error("quadrature error estimate {estimate:e} exceeds the tolerance {tolerance:e}")]
    QuadratureFailure { estimate: f64, tolerance: f64 },
    #[error("truncation {0} too small for prime {1}")]
    TruncationTooSmall(usize, u64),
    #[error("prime bound {bound} does not cover a prime factor of {value}")]
    InsufficientPrimeBound { bound: u64, value: u64 },
    #[error("coefficient index out of range: {0}")]
    IndexOutOfRange(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown verification suite: {0}")]
    UnknownSuite(String),
}
