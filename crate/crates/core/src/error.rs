use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("polynomial vanishes modulo {0}")]
    ZeroPolynomial(u64),
    #[error("{0} is not square-free")]
    NotSquareFree(i64),
    #[error("limit exceeded: {0}")]
    LimitExceeded(String),
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("A*a^p + B*b^p != C*c^3")]
    RelationViolated,
    #[error("singular model: a*b = 0")]
    SingularModel,
    #[error("closed form disagrees with the Weierstrass chain for {0}")]
    ClosedFormMismatch(&'static str),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("triple does not satisfy the equation")]
    NotASolution,
    #[error("consistency check failed: {0}")]
    ConsistencyViolated(String),
    #[error("polynomial is reducible over Q")]
    ReduciblePolynomial,
    #[error("irreducibility over Q could not be certified")]
    IrreducibilityUndecided,
    #[error("polynomial has even degree {0}")]
    EvenDegree(usize),
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("field is not totally real")]
    NotTotallyReal,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
