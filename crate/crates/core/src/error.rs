use num::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(BigInt),
    #[error("expected a positive value, got {0}")]
    NonPositive(BigInt),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("operands do not match: {0}")]
    Mismatch(String),
    #[error("{0} is not invertible")]
    NotInvertible(String),
    #[error("factorization of {0} exceeds the trial-division bound")]
    FactorizationBound(BigInt),

    #[error("matrix determinant is {found}, expected {expected}")]
    WrongDeterminant { expected: BigInt, found: BigInt },
    #[error("point is not in the upper half-plane (im = {0})")]
    NotInUpperHalfPlane(f64),
    #[error("fundamental-domain reduction did not finish within {0} steps")]
    IterationCap(usize),

    #[error("singular curve: discriminant is zero")]
    SingularCurve,
    #[error("point is not on the curve")]
    PointNotOnCurve,
    #[error("prime {0} is not supported here")]
    UnsupportedPrime(u64),
    #[error("model is not integral at {0}")]
    NonIntegralModel(u64),
    #[error("additive reduction at {0}: conductor exponent needs the omitted wild term")]
    UnsupportedAdditiveSmallPrime(u64),
    #[error("not a Fermat triple: {0}")]
    NotAFermatTriple(String),
    #[error("entries are not pairwise coprime: {0}")]
    NotCoprime(String),
    #[error("curve has bad reduction at {0}")]
    BadReductionPrime(u64),

    #[error("insufficient precision: need {required} coefficients, have {available}")]
    InsufficientPrecision { required: i64, available: i64 },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("dimension formula produced a non-integral or negative value: {0}")]
    FormulaViolation(String),

    #[error("point is within {0:e} of a lattice point")]
    NearPole(f64),

    #[error("field of size {0} is too large to enumerate")]
    FieldTooLarge(u64),

    #[error("counterexample found: {0}")]
    Counterexample(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
