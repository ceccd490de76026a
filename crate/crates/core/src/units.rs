//! The unit-style products `eta_(i,j) = prod_r (1 - xi_ell^r xi_f^j)^C(r,i)`
//! in `F_q^x`, together with the index congruences that tie them to the
//! factors `1 - xi_ell^i xi_f^j`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::binomial::{binom, mod_inverse};
use crate::error::{Error, Result};
use crate::ff::{mod_pow, FieldCtx, ParamSet};

/// Kronecker delta on integers.
pub fn kronecker(a: i64, b: i64) -> u64 {
    u64::from(a == b)
}

/// All `eta_(i,j)` over `i in [0, ell-1]`, `j in [1, f-1]`, with their
/// index values. Row `i`, column `j - 1`.
#[derive(Debug, Clone)]
pub struct EtaTable {
    pub values: Vec<Vec<u64>>,
    pub inds: Vec<Vec<u64>>,
}

/// `1 - xi_ell^i xi_f^j` in `F_q`; nonzero whenever `j` is not a multiple
/// of `f`, because `xi_ell^i xi_f^j` is then a nontrivial root of unity.
pub fn one_minus_xi(ctx: &FieldCtx, params: &ParamSet, i: u64, j: u64) -> u64 {
    let q = ctx.q();
    let v = mod_pow(params.xi_l, i, q) * mod_pow(params.xi_f, j, q) % q;
    (1 + q - v) % q
}

/// `eta_(i,j)`: the product of the factors `1 - xi_ell^r xi_f^j` raised to
/// the exact binomial exponents `C(r, i)`. Exponents are reduced mod
/// `q - 1` (the group order) before the modular power.
pub fn eta(ctx: &FieldCtx, params: &ParamSet, i: u64, j: u64) -> Result<u64> {
    if i >= params.ell {
        return Err(Error::OutOfRange {
            what: "eta row index",
            value: i as i64,
        });
    }
    if j == 0 || j >= params.f {
        return Err(Error::OutOfRange {
            what: "eta column index",
            value: j as i64,
        });
    }
    let q = ctx.q();
    let group_order = BigInt::from(q - 1);
    let mut acc = 1u64;
    for r in 0..params.ell {
        let base = one_minus_xi(ctx, params, r, j);
        debug_assert_ne!(base, 0);
        let e = binom(r as i64, i as u32)
            .mod_floor(&group_order)
            .to_u64()
            .expect("exponent fits after reduction");
        acc = acc * mod_pow(base, e, q) % q;
    }
    Ok(acc)
}

/// `eta_(0,m)` collapses to the single factor `1 - xi_f^(m*ell)`.
pub fn eta_zero_row(ctx: &FieldCtx, params: &ParamSet, m: u64) -> u64 {
    let q = ctx.q();
    let v = mod_pow(params.xi_f, m * params.ell, q);
    (1 + q - v) % q
}

pub fn eta_table(ctx: &FieldCtx, params: &ParamSet) -> Result<EtaTable> {
    let mut values = Vec::with_capacity(params.ell as usize);
    let mut inds = Vec::with_capacity(params.ell as usize);
    for i in 0..params.ell {
        let mut row_v = Vec::with_capacity(params.f as usize - 1);
        let mut row_i = Vec::with_capacity(params.f as usize - 1);
        for j in 1..params.f {
            let v = eta(ctx, params, i, j)?;
            row_v.push(v);
            row_i.push(ctx.ind(v)?);
        }
        values.push(row_v);
        inds.push(row_i);
    }
    Ok(EtaTable { values, inds })
}

/// The six index congruences relating `eta`, `xi`, and `ind`, checked
/// exhaustively over the admissible `(i, j)` ranges. Returns the name of
/// the first failing part, or `Ok(())`.
pub fn index_congruence_suite(
    ctx: &FieldCtx,
    params: &ParamSet,
) -> std::result::Result<(), String> {
    let (ell, f, q) = (params.ell, params.f, ctx.q());
    let qm1 = q - 1;
    let m0 = (qm1) / (ell * f);
    let ind = |x: u64| ctx.ind(x).expect("nonzero");
    let ind_minus_one = qm1 / 2;
    if mod_pow(ctx.g(), ind_minus_one, q) != q - 1 {
        return Err("ind(-1) != (q-1)/2".into());
    }

    // (1) eta_(0,m) equals the single factor 1 - xi_f^(m ell)
    for m in 1..f {
        if eta(ctx, params, 0, m).unwrap() != eta_zero_row(ctx, params, m) {
            return Err(format!("eta zero-row identity failed at m={m}"));
        }
    }

    // (2) ind(xi_f) = 0 and ind(xi_l) = (q-1)/(ell f) mod ell
    if ind(params.xi_f) % ell != 0 {
        return Err("ind(xi_f) not divisible by ell".into());
    }
    if ind(params.xi_l) % ell != m0 % ell {
        return Err("ind(xi_l) mismatch mod ell".into());
    }

    // (3) ind eta_(i,j) = sum_r C(r,i) ind(1 - xi_l^r xi_f^j) mod q-1
    for i in 0..ell {
        for j in 1..f {
            let mut sum = BigInt::from(0);
            for r in 0..ell {
                sum +=
                    binom(r as i64, i as u32) * BigInt::from(ind(one_minus_xi(ctx, params, r, j)));
            }
            let want = sum.mod_floor(&BigInt::from(qm1)).to_u64().unwrap();
            if ind(eta(ctx, params, i, j).unwrap()) % qm1 != want {
                return Err(format!("eta index expansion failed at i={i} j={j}"));
            }
        }
    }

    // (4) reflection j -> f - j mod ell
    for i in 0..ell {
        for j in 1..f {
            let lhs = ind(eta(ctx, params, i, f - j).unwrap()) as i64;
            let mut rhs = (kronecker(i as i64, ell as i64 - 1) as i64)
                * (ind_minus_one as i64 - m0 as i64)
                - (kronecker(i as i64, ell as i64 - 2) as i64) * m0 as i64;
            let mut sum = BigInt::from(0);
            for k in 0..=i {
                sum += binom(i as i64 - 1, (i - k) as u32)
                    * BigInt::from(ind(eta(ctx, params, k, j).unwrap()));
            }
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let sum = (BigInt::from(sign) * sum)
                .mod_floor(&BigInt::from(ell))
                .to_i64()
                .unwrap();
            rhs += sum;
            if (lhs - rhs).rem_euclid(ell as i64) != 0 {
                return Err(format!("eta reflection failed at i={i} j={j}"));
            }
        }
    }

    // (5) telescoping expansion of ind(1 - xi_l^i xi_f^j)
    let ell_inv_mod_f = mod_inverse(ell % f, f);
    for i in 1..ell {
        for j in 1..f {
            let m = j * ell_inv_mod_f % f;
            debug_assert!(m >= 1 && m < f);
            let lhs = ind(one_minus_xi(ctx, params, i, j)) as i64;
            let mut rhs = BigInt::from(ind(eta_zero_row(ctx, params, m)));
            for s in (ell - 1 - i)..=(ell.saturating_sub(2)) {
                for a in 0..=s {
                    rhs -= binom(s as i64, a as u32)
                        * BigInt::from(ind(eta(ctx, params, ell - 2 - a, j).unwrap()));
                }
            }
            let rhs = rhs.mod_floor(&BigInt::from(ell)).to_i64().unwrap();
            if (lhs - rhs).rem_euclid(ell as i64) != 0 {
                return Err(format!("telescoping index expansion failed at i={i} j={j}"));
            }
        }
    }

    // (6) inversion symmetry (i, j) -> (ell - i, f - j)
    for i in 1..ell {
        for j in 1..f {
            let lhs = ind(one_minus_xi(ctx, params, i, j)) as i64;
            let rhs = (ind_minus_one as i64
                + (i * m0) as i64
                + ind(one_minus_xi(ctx, params, ell - i, f - j)) as i64)
                .rem_euclid(ell as i64);
            if (lhs - rhs).rem_euclid(ell as i64) != 0 {
                return Err(format!("inversion symmetry failed at i={i} j={j}"));
            }
        }
    }

    Ok(())
}
