//! Error type shared across the toolkit.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("zero has no inverse in F_{0}")]
    ZeroInverse(u32),
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous: {0}")]
    NonHomogeneous(String),
    #[error("exponent arithmetic overflowed")]
    ExponentOverflow,
    #[error("S-pair cap of {cap} exceeded after processing {processed} pairs")]
    PairCapExceeded { cap: usize, processed: usize },
    #[error("iteration cap of {0} exceeded")]
    CapExceeded(usize),
    #[error("the unit ideal has no quotient dimension")]
    UnitIdeal,
    #[error("chain lift failed to divide; this indicates a bug")]
    LiftFailure,
    #[error("degree window too small; it must cover the socle degrees {0:?}")]
    WindowTooSmall(Vec<i64>),
    #[error("Koszul stages did not stabilize on the window; raise the stage")]
    NotStabilized,
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("element {0} is not regular on the quotient ring")]
    NotRegular(String),
    #[error("unknown fixture id {0:?}")]
    UnknownFixture(String),
    #[error("module dimension {dim} over a field of size {q} exceeds the enumeration cap")]
    DimensionCapExceeded { dim: usize, q: u64 },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("operation unsupported over this field: {0}")]
    UnsupportedField(String),
    #[error("{0}")]
    RingMismatch(String),
    #[error("at most {0} variables are supported")]
    TooManyVariables(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for budget-style aborts that downstream classifiers translate
    /// into an `unknown` verdict instead of a hard failure.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            Error::PairCapExceeded { .. } | Error::CapExceeded(_) | Error::DimensionCapExceeded { .. }
        )
    }
}
