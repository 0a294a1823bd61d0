use num_bigint::BigInt;

/// Errors shared by every module of the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("root-of-unity order mismatch: {0} vs {1}")]
    OrderMismatch(u64, u64),
    #[error("variable count mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("division by zero")]
    DivisionByZero,
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("{0} and {1} are not coprime")]
    NotCoprime(i64, i64),
    #[error("invalid surgery description: {0}")]
    InvalidSpec(String),
    #[error("order {d} does not divide surgery coefficient {p}")]
    DivisorMismatch { d: u64, p: i64 },
    #[error("surgery formula hypothesis fails: character is trivial on the closing core")]
    SurgeryHypothesis,
    #[error("internal cancellation failure: {0}")]
    Cancellation(String),
    #[error("augmentation value {0} is not a unit")]
    NotUnitAugmentation(BigInt),
    #[error("degree {degree} exceeds bound {bound}")]
    DegreeBound { degree: i64, bound: i64 },
    #[error("polynomial is not symmetric under t -> 1/t")]
    Asymmetric,
    #[error("{0} is not a prime >= 5")]
    NotOddPrime(u64),
    #[error("lens space order {0} is degenerate (|p| < 2)")]
    DegenerateOrder(i64),
    #[error("sign value {0} is not +1 or -1")]
    BadSign(i64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o failure on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
