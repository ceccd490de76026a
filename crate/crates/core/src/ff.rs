//! Prime-field arithmetic: generator search, dense index (discrete-log)
//! tables, ell-th-power membership, and the canonical roots of unity.

use crate::binomial::mod_inverse;
use crate::error::{Error, Result};

/// Hard ceiling on the dense index table unless overridden: 2^26 entries.
pub const DEFAULT_TABLE_BOUND: u64 = 1 << 26;

/// A prime field `F_q` with a fixed generator `g` of `F_q^x` and the full
/// index table `x -> ind(x)` satisfying `g^(ind x) = x`.
///
/// Immutable after construction; all operations borrow it read-only, so it
/// can be shared freely across threads.
#[derive(Debug, Clone)]
pub struct FieldCtx {
    q: u64,
    g: u64,
    /// `ind_table[x] = ind(x)` for `x in [1, q-1]`; entry 0 is unused.
    ind_table: Vec<u32>,
}

/// Derived roots of unity for a pair of distinct primes `(ell, f)` with
/// `ell * f | q - 1`.
///
/// `zeta_lf = g^((q-1)/(ell f))` and `xi_l`, `xi_f` are the unique ell-th
/// (resp. f-th) roots of unity with `xi_l^f = zeta_l` and `xi_f^ell =
/// zeta_f`; their product recovers `zeta_lf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamSet {
    pub ell: u64,
    pub f: u64,
    pub zeta_lf: u64,
    pub zeta_l: u64,
    pub zeta_f: u64,
    pub xi_l: u64,
    pub xi_f: u64,
}

pub fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut b: u128 = (base % m) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m as u128;
        }
        b = b * b % m as u128;
        exp >>= 1;
    }
    acc as u64
}

/// Deterministic Miller-Rabin, exact for all u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    // This witness set decides primality for every n < 3.3 * 10^24.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = (x as u128 * x as u128 % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Distinct prime factors of `n` by trial division.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn is_generator(g: u64, q: u64, factors: &[u64]) -> bool {
    if g.is_multiple_of(q) {
        return false;
    }
    factors.iter().all(|&p| mod_pow(g, (q - 1) / p, q) != 1)
}

/// Smallest generator of `F_q^x`, found by checking `g^((q-1)/p) != 1`
/// for every prime `p | q - 1`.
pub fn find_smallest_primitive_root(q: u64) -> Result<u64> {
    if !is_prime(q) || q < 3 {
        return Err(Error::NotPrime(q));
    }
    let factors = prime_factors(q - 1);
    (2..q)
        .find(|&g| is_generator(g, q, &factors))
        .ok_or(Error::NotPrime(q))
}

impl FieldCtx {
    /// Build the field context for prime `q`, using the given generator or
    /// the smallest primitive root. The index table is filled by one pass
    /// of successive powers of `g`.
    pub fn new(q: u64, g: Option<u64>) -> Result<Self> {
        Self::with_table_bound(q, g, DEFAULT_TABLE_BOUND)
    }

    pub fn with_table_bound(q: u64, g: Option<u64>, bound: u64) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        if q > bound {
            return Err(Error::TableTooLarge { q, bound });
        }
        let g = match g {
            Some(g) => {
                let factors = prime_factors(q - 1);
                if !(2..q).contains(&g) || !is_generator(g, q, &factors) {
                    return Err(Error::NotAGenerator { g, q });
                }
                g
            }
            None => find_smallest_primitive_root(q)?,
        };
        let mut ind_table = vec![0u32; q as usize];
        let mut x = 1u64;
        for a in 0..q - 1 {
            ind_table[x as usize] = a as u32;
            x = x * g % q;
        }
        debug_assert_eq!(x, 1, "g must have order q - 1");
        Ok(Self { q, g, ind_table })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn g(&self) -> u64 {
        self.g
    }

    /// `ind(x)`: the exponent in `[0, q-2]` with `g^(ind x) = x`.
    pub fn ind(&self, x: u64) -> Result<u64> {
        let x = x % self.q;
        if x == 0 {
            return Err(Error::IndOfZero);
        }
        Ok(u64::from(self.ind_table[x as usize]))
    }

    /// `x` is an ell-th power in `F_q^x` iff `ell | ind(x)`.
    pub fn is_ell_power(&self, x: u64, ell: u64) -> Result<bool> {
        if !(self.q - 1).is_multiple_of(ell) {
            return Err(Error::OrderNotDivisible {
                m: ell,
                qm1: self.q - 1,
            });
        }
        Ok(self.ind(x)? % ell == 0)
    }

    /// Roots of unity attached to a pair of distinct primes `(ell, f)`
    /// dividing `q - 1` as `ell * f`.
    pub fn derive_param_set(&self, ell: u64, f: u64) -> Result<ParamSet> {
        if ell == f || !is_prime(ell) || !is_prime(f) {
            return Err(Error::BadCharacterOrders { ell, f });
        }
        let n = ell * f;
        if !(self.q - 1).is_multiple_of(n) {
            return Err(Error::OrderNotDivisible {
                m: n,
                qm1: self.q - 1,
            });
        }
        let q = self.q;
        let zeta_lf = mod_pow(self.g, (q - 1) / n, q);
        let zeta_f = mod_pow(zeta_lf, ell, q);
        let zeta_l = mod_pow(zeta_lf, f, q);
        // Coprimality of ell and f forces unique xi's; the inverse
        // exponents realize them.
        let xi_l = mod_pow(zeta_l, mod_inverse(f % ell, ell), q);
        let xi_f = mod_pow(zeta_f, mod_inverse(ell % f, f), q);
        debug_assert_eq!(xi_l * xi_f % q, zeta_lf);
        debug_assert_eq!(mod_pow(xi_l, f, q), zeta_l);
        debug_assert_eq!(mod_pow(xi_f, ell, q), zeta_f);
        debug_assert_eq!(mod_pow(xi_l, ell, q), 1);
        debug_assert_eq!(mod_pow(xi_f, f, q), 1);
        Ok(ParamSet {
            ell,
            f,
            zeta_lf,
            zeta_l,
            zeta_f,
            xi_l,
            xi_f,
        })
    }
}

impl ParamSet {
    /// `(q - 1) / (ell * f)`, the index of `zeta_lf`.
    pub fn cofactor(&self, ctx: &FieldCtx) -> u64 {
        (ctx.q() - 1) / (self.ell * self.f)
    }
}
