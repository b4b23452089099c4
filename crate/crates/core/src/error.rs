use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("integer overflow in polynomial coefficient arithmetic")]
    OverflowDetected,
    #[error("division leaves a nonzero remainder")]
    NonExactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("{n} exceeds the configured limit {limit}")]
    LimitExceeded { n: u64, limit: u64 },
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("primes must be strictly increasing, got {0:?}")]
    NotAscending(Vec<u64>),
    #[error("diagram needs {cells} cells, render limit is {limit}")]
    RenderLimitExceeded { cells: u64, limit: u64 },
    #[error("terms cancel at exponent {0}")]
    CancellationDetected(u64),
    #[error("coefficients of an operand have mixed signs")]
    MixedSigns,
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
    #[error("survey for p1={p1} exceeds the work budget (p1 <= {budget})")]
    BudgetExceeded { p1: u64, budget: u64 },
    #[error("invalid input: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}
