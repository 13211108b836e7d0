use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A quantity that is an integer by construction left a remainder.
    #[error("inexact division in {context}: {dividend} / {divisor}")]
    InexactDivision { context: String, dividend: BigInt, divisor: BigInt },

    /// Polynomial long division left a nonzero remainder (ascending coefficients).
    #[error("not divisible: remainder {remainder}")]
    NotDivisible { remainder: String },

    /// Divisible over Q but the quotient has a non-integer coefficient.
    #[error("quotient not in Z[x]: coefficient of x^{degree} is {coefficient}")]
    NotIntegral { degree: usize, coefficient: String },

    #[error("computation routes disagree for {quantity}({n}): {values}")]
    MethodMismatch { quantity: &'static str, n: u64, values: String },

    #[error("modulus must be > 1, got {0}")]
    BadModulus(BigInt),

    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible { value: BigInt, modulus: BigInt },

    #[error("{0} is not a prime")]
    NotAPrime(BigInt),

    #[error("prime {p} is too small: the claim requires p > {bound}")]
    PrimeTooSmall { p: BigInt, bound: u64 },

    #[error("n = {0} is odd: the claim requires even n")]
    OddN(u64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown claim selector `{0}`")]
    UnknownClaim(String),

    #[error("malformed cache file: {0}")]
    Cache(String),

    #[error("malformed certificate spec: {0}")]
    CertificateSpec(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// True for errors caused by a parameter outside a claim's hypothesis
    /// or by a bad request, as opposed to a failed computation.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::BadModulus(_)
                | Error::NotAPrime(_)
                | Error::PrimeTooSmall { .. }
                | Error::OddN(_)
                | Error::InvalidArgument(_)
                | Error::UnknownClaim(_)
                | Error::CertificateSpec(_)
        )
    }
}
