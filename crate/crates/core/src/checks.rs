//! Named consistency suites. Each one re-derives a fact along a second,
//! independent route; `verify` runs them per case and records the verdicts
//! instead of trusting any single code path.

use crate::cyclotomic::CycInt;
use crate::error::Result;
use crate::ff::FieldCtx;
use crate::jacobi::jacobi_sum;
use crate::ringr::RElem;
use crate::sums::SumContext;
use crate::units;

/// Closed form of the tau projection: `T(0, i)` equals `-1` at `i = 0`,
/// vanishes for `i in [1, ell-2]`, and equals `(q-1)/ell` at `i = ell-1`.
pub fn tau_closed_form(sc: &SumContext) -> bool {
    let ell = sc.params().ell;
    let q = sc.field().q();
    (0..ell).all(|i| {
        let want = if i == 0 {
            (ell - 1) % ell
        } else if i == ell - 1 {
            (q - 1) / ell % ell
        } else {
            0
        };
        sc.t(0, i) == want
    })
}

/// Coefficient bridge: `[t^j] S(i, 1) = ind eta_(i,j) mod ell` for every
/// `i in [0, ell-1]`, `j in [1, f-1]`.
pub fn eta_coefficient_bridge(sc: &SumContext) -> Result<bool> {
    let (ell, f) = (sc.params().ell, sc.params().f);
    for i in 0..ell {
        let s = sc.s(i, 1);
        for j in 1..f {
            let e = units::eta(sc.field(), sc.params(), i, j)?;
            if s.coeff(j)? != sc.field().ind(e)? % ell {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The product recursion residual lies in `R'` for every admissible pair
/// `1 <= s <= i <= ell-2`; vacuous for `ell = 2`.
pub fn recursion_residuals(sc: &SumContext) -> Result<bool> {
    let ell = sc.params().ell;
    if ell < 3 {
        return Ok(true);
    }
    for i in 1..=ell - 2 {
        for s in 1..=i {
            if !sc.recursion_residual(i, s)?.in_r_prime() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `J(ell, f) * conj(J(ell, f)) = q`, exactly, as cyclotomic integers.
pub fn jacobi_magnitude(ctx: &FieldCtx, ell: u64, f: u64) -> Result<bool> {
    let j = jacobi_sum(ctx, ell, f, ell as i64, f as i64)?;
    let product = j.checked_mul(&j.conj())?;
    Ok(product == CycInt::from_integer(ell * f, ctx.q()))
}

/// `S(0, i)` is constant iff `W(0, i) = 0` for `i in [1, ell-2]`, and the
/// shifted top case `S(0, ell-1) - m (1 + t + ... + t^(f-1))` is constant
/// iff `W(0, ell-1) = 0`.
pub fn omega_bridge(sc: &SumContext) -> bool {
    let (ell, f) = (sc.params().ell, sc.params().f);
    for i in 1..ell.saturating_sub(1) {
        if sc.s(0, i).in_r_prime() != sc.w(0, i).is_zero() {
            return false;
        }
    }
    let shifted = sc
        .s(0, ell - 1)
        .sub(&RElem::all_ones(ell, f, sc.cofactor() as i64));
    shifted.in_r_prime() == sc.w(0, ell - 1).is_zero()
}

/// Consequences of the recursion under its hypothesis: whenever every
/// `S(u, v)` with `u + v <= i`, `v >= 1` is constant, the scaled neighbor
/// differences are constant and the anti-diagonal memberships at level
/// `i + 1` are all-or-nothing.
pub fn recursion_consequences(sc: &SumContext) -> Result<bool> {
    let ell = sc.params().ell;
    if ell < 3 {
        return Ok(true);
    }
    for i in 1..=ell - 2 {
        let hypothesis = (1..=i).all(|v| (0..=(i - v)).all(|u| sc.s(u, v).in_r_prime()));
        if !hypothesis {
            continue;
        }
        for s in 1..=i {
            let diff = sc
                .s(i - s + 1, s)
                .scale((i - s + 1) as i64)
                .sub(&sc.s(i - s, s + 1).scale((s + 1) as i64));
            if !diff.in_r_prime() {
                return Ok(false);
            }
        }
        let members = (1..=i + 1)
            .filter(|&v| sc.s(i + 1 - v, v).in_r_prime())
            .count() as u64;
        if members != 0 && members != i + 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Bijectivity of `ind` on the constructed table: every value in
/// `[0, q-2]` is hit exactly once and `ind(1) = 0`.
pub fn ind_bijectivity(ctx: &FieldCtx) -> bool {
    let q = ctx.q();
    let mut seen = vec![false; (q - 1) as usize];
    for x in 1..q {
        let a = ctx.ind(x).expect("nonzero") as usize;
        if seen[a] {
            return false;
        }
        seen[a] = true;
    }
    ctx.ind(1).expect("one") == 0 && seen.into_iter().all(|s| s)
}

/// `ind(yz) = ind(y) + ind(z) mod q-1` on sampled pairs.
pub fn ind_additivity(ctx: &FieldCtx, samples: u64) -> bool {
    let q = ctx.q();
    let step = (q / samples.max(1)).max(1);
    let mut y = 1u64;
    loop {
        if y >= q {
            return true;
        }
        let mut z = 2u64;
        while z < q {
            let lhs = ctx.ind(y * z % q).expect("nonzero");
            let rhs = (ctx.ind(y).unwrap() + ctx.ind(z).unwrap()) % (q - 1);
            if lhs != rhs {
                return false;
            }
            z += step;
        }
        y += step;
    }
}

/// Grouped-product identity: summing `ind(1 - g^a)` over `a` in a fixed
/// residue class mod `ell` and mod `f` reproduces
/// `ind(1 - xi_l^r xi_f^j) mod q-1`.
pub fn cyclotomic_product(sc: &SumContext) -> Result<bool> {
    let ctx = sc.field();
    let p = sc.params();
    let q = ctx.q();
    let (ell, f) = (p.ell, p.f);
    let mut sums = vec![vec![0u64; f as usize]; ell as usize];
    let g = ctx.g();
    let mut x = 1u64;
    for a in 1..=q - 2 {
        x = x * g % q; // x = g^a
        let v = ctx.ind((1 + q - x) % q)?;
        let cell = &mut sums[(a % ell) as usize][(a % f) as usize];
        *cell = (*cell + v) % (q - 1);
    }
    for r in 0..ell {
        for j in 1..f {
            let want = ctx.ind(units::one_minus_xi(ctx, p, r, j))?;
            if sums[r as usize][j as usize] != want % (q - 1) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
