use thiserror::Error;

/// Errors raised by parameter validation and domain checks.
///
/// Disagreement between provably-equivalent criteria is *not* an error:
/// it is reported as data in [`crate::theorems::VerifyReport`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{g} does not generate the multiplicative group mod {q}")]
    NotAGenerator { g: u64, q: u64 },

    #[error("{m} does not divide q - 1 = {qm1}")]
    OrderNotDivisible { m: u64, qm1: u64 },

    #[error("ell and f must be distinct primes (got ell = {ell}, f = {f})")]
    BadCharacterOrders { ell: u64, f: u64 },

    #[error("index of 0 is undefined")]
    IndOfZero,

    #[error("{what} out of range: {value}")]
    OutOfRange { what: &'static str, value: i64 },

    #[error("conductor mismatch: {left} vs {right}")]
    ConductorMismatch { left: u64, right: u64 },

    #[error("exponent {0} vanishes mod ell*f; the character power is trivial")]
    TrivialCharacter(i64),

    #[error("q = {q} exceeds the index-table bound {bound}")]
    TableTooLarge { q: u64, bound: u64 },

    #[error("invalid sweep bounds: q_min = {q_min} > q_max = {q_max}")]
    BadSweepBounds { q_min: u64, q_max: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
