use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("polynomial division is not exact")]
    InexactDivision,

    #[error("cyclotomic orders are incompatible: {from} does not divide {to}")]
    IncompatibleOrders { from: u64, to: u64 },

    #[error("cyclotomic order {order} is too small: {needed} must divide it")]
    OrderTooSmall { order: u64, needed: u64 },

    #[error("{m} and {n} are not coprime")]
    NotCoprime { m: i64, n: u64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unsupported parameter: {0}")]
    Unsupported(String),

    #[error("pole: {0}")]
    Pole(String),

    #[error("bailey pair relative to {found} where {expected} is required")]
    WrongRelativeParameter { expected: &'static str, found: &'static str },

    #[error("ill-formed chi: {0}")]
    IllFormedChi(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("non-integral exponent in chi sum: n = {n}, shift = {shift}, modulus = {modulus}")]
    NonIntegralExponent { n: i64, shift: i64, modulus: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
