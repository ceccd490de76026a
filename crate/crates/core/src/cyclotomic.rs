//! Exact arithmetic in `Z[zeta_n]` and `Q(zeta_n)` over the power basis
//! `{1, zeta, ..., zeta^(phi(n)-1)}` modulo the n-th cyclotomic polynomial,
//! plus the pi-power ideal-membership test that decides divisibility of
//! `J + 1` by powers of `pi = zeta_ell - 1`.
//!
//! The power basis is an integral basis of the maximal order, so "alpha is
//! divisible by pi^k" reduces to "alpha * pi^(-k) has denominator 1 in
//! every coordinate", computed by exact rational division. No prime-ideal
//! factorization is ever needed.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Dense ascending-coefficient polynomial helpers. Degrees stay below
/// `2 * phi(n)` throughout, so schoolbook multiplication and long division
/// are plenty.
mod poly {
    use super::*;

    pub fn trim<T: Zero>(v: &mut Vec<T>) {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
    }

    pub fn mul_z(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                out[i + j] += ai * bj;
            }
        }
        trim(&mut out);
        out
    }

    /// Remainder of `num` modulo the monic `den`, over Z.
    pub fn rem_monic_z(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
        debug_assert!(den.last() == Some(&BigInt::one()));
        let mut rem: Vec<BigInt> = num.to_vec();
        let d = den.len() - 1;
        while rem.len() > d {
            let lead = rem.pop().unwrap();
            if lead.is_zero() {
                continue;
            }
            let shift = rem.len() - d;
            for (j, c) in den[..d].iter().enumerate() {
                let delta = &lead * c;
                rem[shift + j] -= delta;
            }
        }
        trim(&mut rem);
        rem
    }

    /// Exact quotient `num / den` for monic `den` over Z; panics on a
    /// nonzero remainder.
    pub fn div_exact_monic_z(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
        debug_assert!(den.last() == Some(&BigInt::one()));
        let mut rem: Vec<BigInt> = num.to_vec();
        let d = den.len() - 1;
        let mut quot = vec![BigInt::zero(); rem.len().saturating_sub(d)];
        while rem.len() > d {
            let lead = rem.pop().unwrap();
            let shift = rem.len() - d;
            if lead.is_zero() {
                continue;
            }
            for (j, c) in den[..d].iter().enumerate() {
                let delta = &lead * c;
                rem[shift + j] -= delta;
            }
            quot[shift] = lead;
        }
        trim(&mut rem);
        assert!(rem.is_empty(), "division was not exact");
        trim(&mut quot);
        quot
    }

    pub fn mul_q(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                out[i + j] += ai * bj;
            }
        }
        trim(&mut out);
        out
    }

    pub fn rem_q(num: &[BigRational], den: &[BigRational]) -> Vec<BigRational> {
        let mut rem: Vec<BigRational> = num.to_vec();
        trim(&mut rem);
        let d = den.len() - 1;
        let lead_inv = den.last().unwrap().recip();
        while rem.len() > d {
            let lead = rem.pop().unwrap() * &lead_inv;
            if lead.is_zero() {
                continue;
            }
            let shift = rem.len() - d;
            for (j, c) in den[..d].iter().enumerate() {
                let delta = &lead * c;
                rem[shift + j] -= delta;
            }
        }
        trim(&mut rem);
        rem
    }

    /// Bezout coefficient `u` with `u * a = g (mod b)` where `g` is the
    /// (constant, for coprime inputs) gcd of `a` and `b` over Q.
    pub fn bezout_q(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let mut r0 = a.to_vec();
        let mut r1 = b.to_vec();
        trim(&mut r0);
        trim(&mut r1);
        let mut u0: Vec<BigRational> = vec![BigRational::one()];
        let mut u1: Vec<BigRational> = Vec::new();
        while !r1.is_empty() {
            let (q, r) = divrem(&r0, &r1);
            let qu1 = mul_q(&q, &u1);
            let mut u2 = u0.clone();
            sub_assign(&mut u2, &qu1);
            r0 = std::mem::replace(&mut r1, r);
            u0 = std::mem::replace(&mut u1, u2);
        }
        (r0, u0)
    }

    fn sub_assign(a: &mut Vec<BigRational>, b: &[BigRational]) {
        if a.len() < b.len() {
            a.resize(b.len(), BigRational::zero());
        }
        for (x, y) in a.iter_mut().zip(b) {
            *x -= y;
        }
        trim(a);
    }

    fn divrem(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let mut rem = num.to_vec();
        let d = den.len() - 1;
        let lead_inv = den.last().unwrap().recip();
        let mut quot = vec![BigRational::zero(); rem.len().saturating_sub(d)];
        while rem.len() > d {
            let lead = rem.pop().unwrap() * &lead_inv;
            let shift = rem.len() - d;
            if !lead.is_zero() {
                for (j, c) in den[..d].iter().enumerate() {
                    let delta = &lead * c;
                    rem[shift + j] -= delta;
                }
                quot[shift] = lead;
            }
        }
        trim(&mut rem);
        trim(&mut quot);
        (quot, rem)
    }
}

/// Euler's totient by trial-division factorization.
pub fn euler_phi(n: u64) -> u64 {
    let mut phi = n;
    for p in crate::ff::prime_factors(n) {
        phi = phi / p * (p - 1);
    }
    phi
}

/// Coefficients (ascending) of the n-th cyclotomic polynomial: monic of
/// degree `phi(n)`, obtained by exact division of `x^n - 1` by all lower
/// cyclotomic polynomials at proper divisors of `n`.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    assert!(n >= 1);
    let mut cache: Vec<Option<Vec<BigInt>>> = vec![None; n as usize + 1];
    for d in 1..=n {
        if !n.is_multiple_of(d) {
            continue;
        }
        // x^d - 1
        let mut num = vec![BigInt::zero(); d as usize + 1];
        num[0] = -BigInt::one();
        num[d as usize] = BigInt::one();
        let mut acc = num;
        for e in 1..d {
            if d % e == 0 {
                acc = poly::div_exact_monic_z(&acc, cache[e as usize].as_ref().unwrap());
            }
        }
        cache[d as usize] = Some(acc);
    }
    cache[n as usize].take().unwrap()
}

/// An element of `Z[zeta_n]` as `phi(n)` exact integer coordinates over
/// the power basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycInt {
    n: u64,
    coords: Vec<BigInt>,
}

/// An element of `Q(zeta_n)`; integral exactly when every coordinate has
/// denominator 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycRat {
    n: u64,
    coords: Vec<BigRational>,
}

impl CycInt {
    pub fn zero(n: u64) -> Self {
        Self {
            n,
            coords: vec![BigInt::zero(); euler_phi(n) as usize],
        }
    }

    pub fn from_integer(n: u64, value: impl Into<BigInt>) -> Self {
        let mut out = Self::zero(n);
        out.coords[0] = value.into();
        out
    }

    /// `zeta_n^e`, reduced.
    pub fn zeta_pow(n: u64, e: u64) -> Self {
        let e = (e % n) as usize;
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = BigInt::one();
        Self::from_poly(n, coeffs)
    }

    /// Reduce an arbitrary integer polynomial in `zeta_n` into the power
    /// basis.
    pub fn from_poly(n: u64, coeffs: Vec<BigInt>) -> Self {
        let phi = euler_phi(n) as usize;
        let modulus = cyclotomic_polynomial(n);
        let mut coords = poly::rem_monic_z(&coeffs, &modulus);
        coords.resize(phi, BigInt::zero());
        Self { n, coords }
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    fn ensure_same_conductor(&self, rhs: &Self) -> Result<()> {
        if self.n != rhs.n {
            return Err(Error::ConductorMismatch {
                left: self.n,
                right: rhs.n,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.ensure_same_conductor(rhs)?;
        Ok(Self {
            n: self.n,
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.ensure_same_conductor(rhs)?;
        Ok(Self {
            n: self.n,
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.ensure_same_conductor(rhs)?;
        let prod = poly::mul_z(&self.coords, &rhs.coords);
        Ok(Self::from_poly(self.n, prod))
    }

    pub fn neg(&self) -> Self {
        Self {
            n: self.n,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, k: impl Into<BigInt>) -> Self {
        let k = k.into();
        Self {
            n: self.n,
            coords: self.coords.iter().map(|c| c * &k).collect(),
        }
    }

    /// Complex conjugation: `zeta -> zeta^(n-1)`.
    pub fn conj(&self) -> Self {
        let n = self.n;
        let mut coeffs = vec![BigInt::zero(); n as usize];
        for (i, c) in self.coords.iter().enumerate() {
            let e = (i as u64 * (n - 1) % n) as usize;
            coeffs[e] += c;
        }
        Self::from_poly(n, coeffs)
    }

    pub fn to_rational(&self) -> CycRat {
        CycRat {
            n: self.n,
            coords: self
                .coords
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        }
    }
}

impl std::ops::Add for &CycInt {
    type Output = CycInt;
    fn add(self, rhs: &CycInt) -> CycInt {
        self.checked_add(rhs).expect("conductor mismatch")
    }
}

impl std::ops::Sub for &CycInt {
    type Output = CycInt;
    fn sub(self, rhs: &CycInt) -> CycInt {
        self.checked_sub(rhs).expect("conductor mismatch")
    }
}

impl std::ops::Mul for &CycInt {
    type Output = CycInt;
    fn mul(self, rhs: &CycInt) -> CycInt {
        self.checked_mul(rhs).expect("conductor mismatch")
    }
}

impl CycRat {
    pub fn conductor(&self) -> u64 {
        self.n
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.denom().is_one())
    }

    pub fn to_cyc_int(&self) -> Option<CycInt> {
        if !self.is_integral() {
            return None;
        }
        Some(CycInt {
            n: self.n,
            coords: self.coords.iter().map(|c| c.numer().clone()).collect(),
        })
    }

    fn mul_reduced(&self, rhs: &Self, modulus: &[BigRational]) -> Self {
        debug_assert_eq!(self.n, rhs.n);
        let prod = poly::mul_q(&self.coords, &rhs.coords);
        let mut coords = poly::rem_q(&prod, modulus);
        coords.resize(modulus.len() - 1, BigRational::zero());
        Self { n: self.n, coords }
    }
}

fn rational_modulus(n: u64) -> Vec<BigRational> {
    cyclotomic_polynomial(n)
        .into_iter()
        .map(BigRational::from_integer)
        .collect()
}

/// `pi = zeta_ell - 1` inside `Z[zeta_(ell*f)]`, i.e. `zeta_(ell*f)^f - 1`.
pub fn pi_element(ell: u64, f: u64) -> CycInt {
    let n = ell * f;
    &CycInt::zeta_pow(n, f) - &CycInt::from_integer(n, 1)
}

/// Multiplicative inverse of `pi` in `Q(zeta_(ell*f))` via the extended
/// Euclidean algorithm against the cyclotomic modulus.
fn pi_inverse(ell: u64, f: u64) -> CycRat {
    let n = ell * f;
    let modulus = rational_modulus(n);
    let pi = pi_element(ell, f).to_rational();
    let (g, u) = poly::bezout_q(&pi.coords, &modulus);
    // pi and the irreducible modulus are coprime, so g is a nonzero constant.
    assert_eq!(
        g.len(),
        1,
        "pi must be invertible mod the cyclotomic polynomial"
    );
    let ginv = g[0].recip();
    let scaled: Vec<BigRational> = u.into_iter().map(|c| c * &ginv).collect();
    let mut coords = poly::rem_q(&scaled, &modulus);
    coords.resize(modulus.len() - 1, BigRational::zero());
    CycRat { n, coords }
}

/// Does `alpha / pi^k` lie in `Z[zeta_(ell*f)]`? Decided by multiplying
/// by the exact rational inverse of `pi` k times and checking that every
/// coordinate is an integer.
pub fn pi_power_membership(alpha: &CycInt, ell: u64, f: u64, k: u32) -> Result<bool> {
    let n = ell * f;
    if alpha.conductor() != n {
        return Err(Error::ConductorMismatch {
            left: alpha.conductor(),
            right: n,
        });
    }
    if k == 0 {
        return Ok(true);
    }
    let modulus = rational_modulus(n);
    let inv = pi_inverse(ell, f);
    let mut invk = inv.clone();
    for _ in 1..k {
        invk = invk.mul_reduced(&inv, &modulus);
    }
    Ok(alpha
        .to_rational()
        .mul_reduced(&invk, &modulus)
        .is_integral())
}

/// Largest `k <= cap` with `alpha` divisible by `pi^k`. Since divisibility
/// at `k` implies divisibility at every smaller exponent, successive exact
/// division gives the floor directly; a return value equal to `cap` only
/// bounds the true valuation from below.
pub fn valuation_floor(alpha: &CycInt, ell: u64, f: u64, cap: u32) -> Result<u32> {
    let n = ell * f;
    if alpha.conductor() != n {
        return Err(Error::ConductorMismatch {
            left: alpha.conductor(),
            right: n,
        });
    }
    let modulus = rational_modulus(n);
    let inv = pi_inverse(ell, f);
    let mut current = alpha.clone();
    let mut k = 0;
    while k < cap {
        let next = current.to_rational().mul_reduced(&inv, &modulus);
        match next.to_cyc_int() {
            Some(v) => {
                current = v;
                k += 1;
            }
            None => break,
        }
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: u64, coords: &[i64]) -> CycInt {
        let mut v: Vec<BigInt> = coords.iter().map(|&c| BigInt::from(c)).collect();
        v.resize(euler_phi(n) as usize, BigInt::zero());
        CycInt { n, coords: v }
    }

    #[test]
    fn cyclotomic_polynomials_match_division_oracle() {
        let to_i64 =
            |v: Vec<BigInt>| -> Vec<i64> { v.iter().map(|c| i64::try_from(c).unwrap()).collect() };
        assert_eq!(to_i64(cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(to_i64(cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(to_i64(cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(
            to_i64(cyclotomic_polynomial(15)),
            vec![1, -1, 0, 1, -1, 1, 0, -1, 1]
        );
        // product over divisors rebuilds x^n - 1
        for n in [6u64, 10, 14, 15, 21, 35] {
            let mut prod = vec![BigInt::one()];
            for d in 1..=n {
                if n % d == 0 {
                    prod = super::poly::mul_z(&prod, &cyclotomic_polynomial(d));
                }
            }
            let mut expect = vec![BigInt::zero(); n as usize + 1];
            expect[0] = -BigInt::one();
            expect[n as usize] = BigInt::one();
            assert_eq!(prod, expect);
        }
    }

    #[test]
    fn phi_values() {
        for (n, want) in [(1u64, 1u64), (2, 1), (6, 2), (10, 4), (15, 8), (35, 24)] {
            assert_eq!(euler_phi(n), want);
        }
    }

    #[test]
    fn multiplication_reduces() {
        let z = CycInt::zeta_pow(6, 1);
        // zeta6^2 = zeta6 - 1
        assert_eq!(&z * &z, cyc(6, &[-1, 1]));
        // zeta6 * zeta6^5 = 1
        assert_eq!(&z * &CycInt::zeta_pow(6, 5), CycInt::from_integer(6, 1));
        let a = cyc(6, &[3, -2]);
        assert_eq!(&a * &CycInt::from_integer(6, 1), a);
    }

    #[test]
    fn modulus_vanishes_on_zeta() {
        for n in [6u64, 10, 15, 14, 21] {
            let phi_coeffs = cyclotomic_polynomial(n);
            assert!(CycInt::from_poly(n, phi_coeffs).is_zero());
        }
    }

    #[test]
    fn conjugation() {
        assert_eq!(
            CycInt::from_integer(6, 1).conj(),
            CycInt::from_integer(6, 1)
        );
        // conj(zeta6) = zeta6^5 = 1 - zeta6
        assert_eq!(CycInt::zeta_pow(6, 1).conj(), cyc(6, &[1, -1]));
    }

    #[test]
    fn conductor_mismatch_is_an_error() {
        let a = CycInt::from_integer(6, 1);
        let b = CycInt::from_integer(10, 1);
        assert!(matches!(
            a.checked_mul(&b),
            Err(Error::ConductorMismatch { .. })
        ));
    }

    #[test]
    fn pi_for_ell2_f3_is_minus_two() {
        assert_eq!(pi_element(2, 3), cyc(6, &[-2, 0]));
    }

    #[test]
    fn membership_examples() {
        // alpha = 2 + 2 zeta6, pi = -2: alpha / pi = -1 - zeta6 integral
        let alpha = cyc(6, &[2, 2]);
        assert!(pi_power_membership(&alpha, 2, 3, 1).unwrap());
        assert!(!pi_power_membership(&alpha, 2, 3, 2).unwrap());
        assert!(pi_power_membership(&CycInt::zero(6), 2, 3, 7).unwrap());
        assert!(pi_power_membership(&alpha, 2, 3, 0).unwrap());
    }

    #[test]
    fn valuation_floor_examples() {
        let alpha = cyc(6, &[2, 2]);
        assert_eq!(valuation_floor(&alpha, 2, 3, 2).unwrap(), 1);
        assert_eq!(valuation_floor(&cyc(6, &[4, 0]), 2, 3, 2).unwrap(), 2);
        assert_eq!(valuation_floor(&CycInt::zero(6), 2, 3, 5).unwrap(), 5);
    }

    #[test]
    fn ramification_of_ell() {
        // ell = unit * pi^(ell-1) in Z[zeta_ell], so the constant ell is
        // divisible by pi^(ell-1) but not pi^ell.
        for (ell, f) in [(2u64, 3u64), (3, 2), (3, 5), (5, 2), (5, 3), (7, 2)] {
            let alpha = CycInt::from_integer(ell * f, i64::try_from(ell).unwrap());
            assert!(pi_power_membership(&alpha, ell, f, ell as u32 - 1).unwrap());
            assert!(!pi_power_membership(&alpha, ell, f, ell as u32).unwrap());
        }
    }

    #[test]
    fn membership_is_monotone() {
        let cases = [
            cyc(6, &[2, 2]),
            cyc(6, &[4, 0]),
            cyc(6, &[6, -2]),
            cyc(6, &[5, 1]),
        ];
        for alpha in &cases {
            let mut prev = true;
            for k in 0..=4u32 {
                let now = pi_power_membership(alpha, 2, 3, k).unwrap();
                assert!(prev || !now, "membership not monotone at k={k}");
                prev = now;
            }
            // floor agrees with the one-shot membership tests
            let floor = valuation_floor(alpha, 2, 3, 4).unwrap();
            for k in 0..=4u32 {
                assert_eq!(
                    pi_power_membership(alpha, 2, 3, k).unwrap(),
                    k <= floor,
                    "floor/membership disagree at k={k}"
                );
            }
        }
    }
}
