//! Generalized binomial coefficients over the integers and mod a prime.
//!
//! `C(a, b)` is the falling-factorial quotient `a (a-1) ... (a-b+1) / b!`,
//! defined for any integer `a` (including negatives) and `b >= 0`. All
//! arithmetic is exact; intermediate products routinely overflow machine
//! words, so the integer version returns a `BigInt`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact generalized binomial coefficient `C(a, b)` for integer `a`.
pub fn binom(a: i64, b: u32) -> BigInt {
    let mut num = BigInt::one();
    for i in 0..b as i64 {
        num *= BigInt::from(a - i);
    }
    let mut den = BigInt::one();
    for i in 1..=b as i64 {
        den *= BigInt::from(i);
    }
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    debug_assert!(r.is_zero());
    q
}

/// `C(a, b) mod ell` for `0 <= b <= ell - 1`, `ell` prime.
///
/// The top argument only matters mod `ell`, so we reduce it into
/// `[0, ell)` first and evaluate the falling factorial mod `ell`,
/// dividing by the (invertible) `b!` at the end. `O(b)` work no matter
/// how large `|a|` is.
pub fn binom_mod(a: i64, b: u32, ell: u64) -> Result<u64> {
    if u64::from(b) >= ell {
        return Err(Error::OutOfRange {
            what: "binomial lower index (must be < ell)",
            value: i64::from(b),
        });
    }
    let a_red = a.rem_euclid(ell as i64) as u64;
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..u64::from(b) {
        // a_red - i as a residue; the factor is zero exactly when i == a_red.
        let factor = (a_red + ell - i % ell) % ell;
        num = num * factor % ell;
        den = den * ((i + 1) % ell) % ell;
    }
    Ok(num * mod_inverse(den, ell) % ell)
}

/// Lookup table `r -> C(r, b) mod ell` over `r in [0, ell)`.
///
/// Since `C(a, b) mod ell` depends on `a` only through `a mod ell`
/// (for `b < ell`), a length-`ell` table turns every binomial in a
/// character-sum pass into one array read.
pub fn binom_mod_table(b: u32, ell: u64) -> Result<Vec<u64>> {
    (0..ell).map(|r| binom_mod(r as i64, b, ell)).collect()
}

/// Inverse of `a` mod prime `m` via extended Euclid. Panics on `a == 0`.
pub(crate) fn mod_inverse(a: u64, m: u64) -> u64 {
    assert!(!a.is_multiple_of(m), "zero has no inverse");
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1, "modulus must be coprime to a");
    s0.rem_euclid(m as i128) as u64
}

/// Signed range sum `sum_{c=0}^{a-1} term(c)`, extended to negative `a`
/// by the reflection `-sum_{c=a}^{-1} term(c)` so that identities built
/// on it hold for every integer upper bound.
pub fn signed_range_sum<F: Fn(i64) -> BigInt>(a: i64, term: F) -> BigInt {
    let mut acc = BigInt::zero();
    if a >= 0 {
        for c in 0..a {
            acc += term(c);
        }
    } else {
        for c in a..0 {
            acc -= term(c);
        }
    }
    acc
}

/// The eleven binomial identities exercised by the self-test suite.
///
/// Each entry is `(name, check)` where `check` evaluates the identity on
/// one sampled instance and returns whether it held. Sampling is done by
/// the caller so both the self-test and the acceptance suite can pick
/// their own case counts and seeds.
pub mod identities {
    use super::*;
    use num_integer::Integer as _;
    use num_traits::ToPrimitive;
    use rand::Rng;

    pub const COUNT: usize = 11;

    pub const NAMES: [&str; COUNT] = [
        "binomial-symmetry",
        "binomial-absorption",
        "binomial-pascal",
        "binomial-weighted-pascal",
        "binomial-hockey-stick",
        "binomial-vandermonde",
        "binomial-negation",
        "binomial-weighted-hockey-stick",
        "binomial-reduce-top",
        "binomial-prime-row-divisibility",
        "binomial-digit-scaling",
    ];

    const PRIMES: [u64; 4] = [2, 3, 5, 7];

    /// Run one random instance of identity `idx` (0-based). Returns false
    /// when the identity fails; `fault` flips the check for fault-injection
    /// tests of the reporting path.
    pub fn check_one<R: Rng>(idx: usize, rng: &mut R, fault: bool) -> bool {
        let a = rng.gen_range(-50i64..=50);
        let b = rng.gen_range(0u32..=12);
        let c = rng.gen_range(0u32..=12);
        let ell = PRIMES[rng.gen_range(0..PRIMES.len())];
        let held = match idx {
            // (1) symmetry, needs 0 <= b <= a
            0 => {
                let a = rng.gen_range(0i64..=50);
                let b = rng.gen_range(0i64..=a) as u32;
                binom(a, b) == binom(a, a as u32 - b)
            }
            // (2) (b+1) C(a, b+1) = a C(a-1, b)
            1 => BigInt::from(b + 1) * binom(a, b + 1) == BigInt::from(a) * binom(a - 1, b),
            // (3) Pascal
            2 => binom(a, b + 1) == binom(a - 1, b) + binom(a - 1, b + 1),
            // (4) a C(a,b) = (b+1) C(a,b+1) + b C(a,b)
            3 => {
                BigInt::from(a) * binom(a, b)
                    == BigInt::from(b + 1) * binom(a, b + 1) + BigInt::from(b) * binom(a, b)
            }
            // (5) hockey-stick
            4 => signed_range_sum(a, |x| binom(x, b)) == binom(a, b + 1),
            // (6) Vandermonde
            5 => {
                let a2 = rng.gen_range(-50i64..=50);
                let rhs: BigInt = (0..=c).map(|d| binom(a, d) * binom(a2, c - d)).sum();
                binom(a + a2, c) == rhs
            }
            // (7) negation
            6 => {
                let sign = if b % 2 == 0 { 1 } else { -1 };
                let rhs: BigInt = (0..=b)
                    .map(|k| binom(i64::from(b) - 1, b - k) * binom(a, k))
                    .sum();
                binom(-a, b) == BigInt::from(sign) * rhs
            }
            // (8) weighted hockey-stick
            7 => {
                let lhs = signed_range_sum(a, |x| BigInt::from(x) * binom(x, b));
                lhs == BigInt::from(a - 1) * binom(a, b + 1) - binom(a, b + 2)
            }
            // (9) reduce-top mod ell
            8 => {
                let b = rng.gen_range(0..ell) as u32;
                let shift = rng.gen_range(-5i64..=5) * ell as i64;
                let lhs = binom(a, b).mod_floor(&BigInt::from(ell));
                let rhs = binom(a + shift, b).mod_floor(&BigInt::from(ell));
                lhs == rhs && lhs.to_u64() == Some(binom_mod(a, b, ell).unwrap())
            }
            // (10) ell | a, ell not| b  =>  ell | C(a, b)
            9 => {
                let a = rng.gen_range(-7i64..=7) * ell as i64;
                let mut b = rng.gen_range(1u32..=12);
                if u64::from(b) % ell == 0 {
                    b += 1;
                }
                binom(a, b).mod_floor(&BigInt::from(ell)).is_zero()
            }
            // (11) C(a*ell, b*ell) = C(a, b) mod ell
            10 => {
                let a = rng.gen_range(-8i64..=8);
                let b = rng.gen_range(0u32..=8);
                binom(a * ell as i64, b * ell as u32).mod_floor(&BigInt::from(ell))
                    == binom(a, b).mod_floor(&BigInt::from(ell))
            }
            _ => unreachable!("identity index out of range"),
        };
        held != fault
    }
}
