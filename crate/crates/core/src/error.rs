use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic 2 is not supported: the Virasoro bracket needs 1/2 in the coefficient field")]
    CharacteristicTwo,
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("denominator of {value} is divisible by {p}")]
    DenominatorDivisibleByP { value: String, p: u64 },
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation requires a field, got {0}")]
    NotAField(String),
    #[error("zero vector")]
    ZeroVector,
    #[error("sector mismatch: {0}")]
    SectorMismatch(String),
    #[error("parity mismatch: expected {expected}, found {found}")]
    ParityMismatch { expected: u8, found: u8 },
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
