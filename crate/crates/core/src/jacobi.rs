//! Jacobi sums `J(a, b) = sum_x zeta^(a ind x + b ind(1-x))` as exact
//! elements of `Z[zeta_(ell*f)]`, via an exponent histogram of size
//! `ell*f` followed by one basis reduction.

use num_bigint::BigInt;

use crate::cyclotomic::{valuation_floor, CycInt};
use crate::error::{Error, Result};
use crate::ff::FieldCtx;

/// A computed Jacobi sum together with the exponent pair that defines it.
#[derive(Debug, Clone)]
pub struct JacobiValue {
    pub a: i64,
    pub b: i64,
    pub value: CycInt,
}

/// Exact `J(a, b)` for the character `x -> zeta_(ell*f)^(ind x)`.
/// One pass over the field accumulates a histogram of exponents mod
/// `ell*f`; the histogram is then reduced into the power basis.
pub fn jacobi_sum(ctx: &FieldCtx, ell: u64, f: u64, a: i64, b: i64) -> Result<CycInt> {
    let n = ell * f;
    if !(ctx.q() - 1).is_multiple_of(n) {
        return Err(Error::OrderNotDivisible {
            m: n,
            qm1: ctx.q() - 1,
        });
    }
    if a.rem_euclid(n as i64) == 0 {
        return Err(Error::TrivialCharacter(a));
    }
    if b.rem_euclid(n as i64) == 0 {
        return Err(Error::TrivialCharacter(b));
    }
    let q = ctx.q();
    let a = a.rem_euclid(n as i64) as u64;
    let b = b.rem_euclid(n as i64) as u64;
    let mut hist = vec![0u64; n as usize];
    for x in 2..q {
        let ix = ctx.ind(x)?;
        let iy = ctx.ind((1 + q - x) % q)?;
        let e = (a * ix + b * iy) % n;
        hist[e as usize] += 1;
    }
    let coeffs = hist.into_iter().map(BigInt::from).collect();
    Ok(CycInt::from_poly(n, coeffs))
}

/// `J(ell, f)` as a [`JacobiValue`].
pub fn jacobi_ell_f(ctx: &FieldCtx, ell: u64, f: u64) -> Result<JacobiValue> {
    Ok(JacobiValue {
        a: ell as i64,
        b: f as i64,
        value: jacobi_sum(ctx, ell, f, ell as i64, f as i64)?,
    })
}

/// Largest `k <= cap` with `J(ell, f) + 1` divisible by `pi^k`.
pub fn j_plus_one_val_floor(ctx: &FieldCtx, ell: u64, f: u64, cap: u32) -> Result<u32> {
    let j = jacobi_sum(ctx, ell, f, ell as i64, f as i64)?;
    let shifted = j.checked_add(&CycInt::from_integer(ell * f, 1))?;
    valuation_floor(&shifted, ell, f, cap)
}
