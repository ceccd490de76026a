//! The ring `R = (Z/ell)[t]/(t^f - 1)`, its constant subring `R'`, and the
//! two projections `tau: t -> 1` and `omega: t -> [zeta_f]`.
//!
//! `omega` lands in `(Z/ell)[t]/Phi_f(t)`, a concrete model of the mod-ell
//! residue ring of `Z[zeta_f]`, so "omega(r) = 0" is a plain coefficient
//! check. Together `(omega, tau)` split `R` as a product of rings.

use crate::error::{Error, Result};

/// `a_0 + a_1 t + ... + a_(f-1) t^(f-1)` with coefficients canonically in
/// `[0, ell)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RElem {
    ell: u64,
    f: u64,
    coeffs: Vec<u64>,
}

/// Image of `omega`: a polynomial of degree `< f - 1` over `Z/ell`,
/// i.e. an element of `(Z/ell)[t]/Phi_f(t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MResidue {
    ell: u64,
    f: u64,
    coeffs: Vec<u64>,
}

impl RElem {
    pub fn zero(ell: u64, f: u64) -> Self {
        Self {
            ell,
            f,
            coeffs: vec![0; f as usize],
        }
    }

    pub fn constant(ell: u64, f: u64, c: i64) -> Self {
        let mut out = Self::zero(ell, f);
        out.coeffs[0] = c.rem_euclid(ell as i64) as u64;
        out
    }

    /// `t^e` with the exponent wrapped mod `f`.
    pub fn t_pow(ell: u64, f: u64, e: u64) -> Self {
        let mut out = Self::zero(ell, f);
        out.coeffs[(e % f) as usize] = 1 % ell;
        out
    }

    /// `c * (1 + t + ... + t^(f-1))`.
    pub fn all_ones(ell: u64, f: u64, c: i64) -> Self {
        let v = c.rem_euclid(ell as i64) as u64;
        Self {
            ell,
            f,
            coeffs: vec![v; f as usize],
        }
    }

    pub fn from_coeffs(ell: u64, f: u64, coeffs: &[i64]) -> Self {
        assert_eq!(coeffs.len(), f as usize);
        Self {
            ell,
            f,
            coeffs: coeffs
                .iter()
                .map(|&c| c.rem_euclid(ell as i64) as u64)
                .collect(),
        }
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn f(&self) -> u64 {
        self.f
    }

    /// Coefficient of `t^j`.
    pub fn coeff(&self, j: u64) -> Result<u64> {
        if j >= self.f {
            return Err(Error::OutOfRange {
                what: "coefficient index",
                value: j as i64,
            });
        }
        Ok(self.coeffs[j as usize])
    }

    /// Add `v * t^e` in place (exponent wrapped mod `f`).
    pub fn add_term(&mut self, e: u64, v: u64) {
        let j = (e % self.f) as usize;
        self.coeffs[j] = (self.coeffs[j] + v) % self.ell;
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.zip(rhs, |a, b, ell| (a + b) % ell)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.zip(rhs, |a, b, ell| (a + ell - b) % ell)
    }

    fn zip(&self, rhs: &Self, op: impl Fn(u64, u64, u64) -> u64) -> Self {
        assert_eq!((self.ell, self.f), (rhs.ell, rhs.f), "mixed rings");
        Self {
            ell: self.ell,
            f: self.f,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(&a, &b)| op(a, b, self.ell))
                .collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        let k = k.rem_euclid(self.ell as i64) as u64;
        Self {
            ell: self.ell,
            f: self.f,
            coeffs: self.coeffs.iter().map(|&a| a * k % self.ell).collect(),
        }
    }

    /// Cyclic convolution: multiplication modulo `t^f - 1`.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!((self.ell, self.f), (rhs.ell, rhs.f), "mixed rings");
        let f = self.f as usize;
        let mut out = vec![0u64; f];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                let k = (i + j) % f;
                out[k] = (out[k] + a * b) % self.ell;
            }
        }
        Self {
            ell: self.ell,
            f: self.f,
            coeffs: out,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Membership in the constant subring `R'`.
    pub fn in_r_prime(&self) -> bool {
        self.coeffs[1..].iter().all(|&c| c == 0)
    }

    /// `tau`: evaluate at `t = 1`, i.e. the coefficient sum mod ell.
    pub fn tau(&self) -> u64 {
        self.coeffs.iter().fold(0, |acc, &c| (acc + c) % self.ell)
    }

    /// `omega`: reduce mod `Phi_f(t) = t^(f-1) + ... + 1`, which replaces
    /// `t^(f-1)` by `-(1 + t + ... + t^(f-2))`.
    pub fn omega(&self) -> MResidue {
        let ell = self.ell;
        let top = self.coeffs[self.f as usize - 1];
        let coeffs = self.coeffs[..self.f as usize - 1]
            .iter()
            .map(|&c| (c + ell - top) % ell)
            .collect();
        MResidue {
            ell,
            f: self.f,
            coeffs,
        }
    }

    /// Iterate over every element of `R`; used by the enumeration checks.
    pub fn enumerate_all(ell: u64, f: u64) -> impl Iterator<Item = RElem> {
        let total = (ell as u128).pow(f as u32);
        (0..total).map(move |mut idx| {
            let mut coeffs = vec![0u64; f as usize];
            for c in coeffs.iter_mut() {
                *c = (idx % ell as u128) as u64;
                idx /= ell as u128;
            }
            RElem { ell, f, coeffs }
        })
    }
}

impl MResidue {
    pub fn zero(ell: u64, f: u64) -> Self {
        Self {
            ell,
            f,
            coeffs: vec![0; f as usize - 1],
        }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.ell, self.f), (rhs.ell, rhs.f), "mixed rings");
        Self {
            ell: self.ell,
            f: self.f,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(&a, &b)| (a + b) % self.ell)
                .collect(),
        }
    }

    /// Schoolbook product reduced by `t^(f-1) = -(1 + t + ... + t^(f-2))`.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!((self.ell, self.f), (rhs.ell, rhs.f), "mixed rings");
        let (ell, deg) = (self.ell, self.f as usize - 1);
        let mut tmp = vec![0u64; 2 * deg.max(1)];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                tmp[i + j] = (tmp[i + j] + a * b) % ell;
            }
        }
        for e in (deg..tmp.len()).rev() {
            let c = tmp[e];
            if c == 0 {
                continue;
            }
            tmp[e] = 0;
            for j in 0..deg {
                let k = e - deg + j;
                tmp[k] = (tmp[k] + ell - c) % ell;
            }
        }
        tmp.truncate(deg);
        Self {
            ell,
            f: self.f,
            coeffs: tmp,
        }
    }
}

/// Exhaustive check that `(omega, tau)` is a bijection from `R` onto
/// `(Z/ell)[t]/Phi_f x Z/ell`, plus the kernel property that a trace-zero
/// element is zero iff it is constant iff its omega-image vanishes.
/// Returns `None` when `ell^f` is too large to enumerate.
pub fn crt_enumeration_check(ell: u64, f: u64) -> Option<bool> {
    let total = (ell as u128).pow(f as u32);
    if total > 100_000 {
        return None;
    }
    let mut seen = std::collections::HashSet::with_capacity(total as usize);
    for r in RElem::enumerate_all(ell, f) {
        let image = (r.omega().coeffs().to_vec(), r.tau());
        if !seen.insert(image) {
            return Some(false); // not injective
        }
        if r.tau() == 0 {
            let omega_zero = r.omega().is_zero();
            let is_zero = r.is_zero();
            let constant = r.in_r_prime();
            if omega_zero != is_zero || is_zero != constant {
                return Some(false);
            }
        }
    }
    // injective with equal cardinalities (ell^(f-1) * ell) implies surjective
    Some(seen.len() as u128 == total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tau_examples() {
        let r = RElem::from_coeffs(2, 3, &[1, 1, 1]);
        assert_eq!(r.tau(), 1); // 3 mod 2
        assert_eq!(RElem::zero(2, 3).tau(), 0);
        assert_eq!(RElem::t_pow(2, 3, 1).tau(), 1);
    }

    #[test]
    fn omega_examples() {
        // constants map to constants
        let c = RElem::constant(5, 3, 3);
        assert_eq!(c.omega().coeffs(), &[3, 0]);
        // 1 + t + t^2 = Phi_3(t) maps to 0
        assert!(RElem::from_coeffs(2, 3, &[1, 1, 1]).omega().is_zero());
        // t stays the class of t
        assert_eq!(RElem::t_pow(2, 3, 1).omega().coeffs(), &[0, 1]);
    }

    #[test]
    fn coeff_access() {
        let t = RElem::t_pow(2, 3, 1);
        assert_eq!(t.coeff(1).unwrap(), 1);
        assert_eq!(t.coeff(0).unwrap(), 0);
        assert!(t.coeff(3).is_err());
        let r = RElem::from_coeffs(5, 2, &[3, 2]);
        assert_eq!(r.coeff(0).unwrap(), 3);
    }

    #[test]
    fn r_prime_membership() {
        assert!(RElem::constant(2, 3, 1).in_r_prime());
        assert!(RElem::zero(2, 3).in_r_prime());
        assert!(!RElem::t_pow(2, 3, 1).in_r_prime());
        assert!(!RElem::from_coeffs(2, 3, &[1, 1, 1]).in_r_prime());
    }

    #[test]
    fn exponents_wrap() {
        assert_eq!(RElem::t_pow(2, 3, 5), RElem::t_pow(2, 3, 2));
        let a = RElem::t_pow(2, 3, 2);
        let b = RElem::t_pow(2, 3, 2);
        assert_eq!(a.mul(&b), RElem::t_pow(2, 3, 1)); // t^4 = t
    }

    #[test]
    fn crt_enumeration_small_pairs() {
        for (ell, f) in [
            (2u64, 3u64),
            (3, 2),
            (2, 5),
            (3, 5),
            (2, 7),
            (5, 2),
            (5, 3),
            (7, 2),
        ] {
            assert_eq!(crt_enumeration_check(ell, f), Some(true), "({ell},{f})");
        }
        assert_eq!(crt_enumeration_check(7, 13), None);
    }

    #[test]
    fn projections_are_ring_homomorphisms() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for (ell, f) in [(3u64, 5u64), (5, 3), (7, 2), (2, 7)] {
            for _ in 0..50 {
                let a = RElem::from_coeffs(
                    ell,
                    f,
                    &(0..f)
                        .map(|_| rng.gen_range(0..ell as i64))
                        .collect::<Vec<_>>(),
                );
                let b = RElem::from_coeffs(
                    ell,
                    f,
                    &(0..f)
                        .map(|_| rng.gen_range(0..ell as i64))
                        .collect::<Vec<_>>(),
                );
                assert_eq!(a.add(&b).tau(), (a.tau() + b.tau()) % ell);
                assert_eq!(a.mul(&b).tau(), a.tau() * b.tau() % ell);
                assert_eq!(a.add(&b).omega(), a.omega().add(&b.omega()));
                assert_eq!(a.mul(&b).omega(), a.omega().mul(&b.omega()));
            }
        }
    }
}
