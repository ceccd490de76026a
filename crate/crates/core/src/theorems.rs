//! Per-case evaluation of every equivalence criterion, through independent
//! code paths, and assembly of the verdicts into a serializable report.
//!
//! Disagreement between criteria that are provably equivalent indicates an
//! implementation bug; it is recorded in the report (and fails the sweep
//! exit code), never reconciled silently.

use serde::{Deserialize, Serialize};

use crate::checks;
use crate::cyclotomic::{pi_power_membership, valuation_floor, CycInt};
use crate::error::{Error, Result};
use crate::ff::{FieldCtx, ParamSet};
use crate::jacobi::jacobi_sum;
use crate::ringr::RElem;
use crate::sums::SumContext;
use crate::units;

/// Divisibility of `J(ell, f) + 1` by `pi^k`, for `k in [1, ell-1]`,
/// decided by exact division.
pub fn thm15_cond1(ctx: &FieldCtx, ell: u64, f: u64, k: u32) -> Result<bool> {
    check_k_range(ell, k)?;
    let j1 = j_plus_one(ctx, ell, f)?;
    pi_power_membership(&j1, ell, f, k)
}

/// All `eta_(i,j)` with `i in [0, k-2]`, `j in [1, f-1]` are ell-th
/// powers; vacuously true at `k = 1`.
pub fn thm15_cond2(ctx: &FieldCtx, params: &ParamSet, k: u32) -> Result<bool> {
    check_k_range(params.ell, k)?;
    eta_rows_are_powers(ctx, params, k, params.f - 1)
}

/// Same as [`thm15_cond2`] with the column range halved to `[1, f/2]`.
pub fn thm15_cond3(ctx: &FieldCtx, params: &ParamSet, k: u32) -> Result<bool> {
    check_k_range(params.ell, k)?;
    eta_rows_are_powers(ctx, params, k, params.f / 2)
}

/// Divisibility of `J(ell, f) + 1` by `pi^ell`.
pub fn thm16_cond1(ctx: &FieldCtx, ell: u64, f: u64) -> Result<bool> {
    let j1 = j_plus_one(ctx, ell, f)?;
    pi_power_membership(&j1, ell, f, ell as u32)
}

/// `q = 1 mod ell^2 f` and every factor `1 - xi_l^i xi_f^j` with
/// `i in [0, ell-1]`, `j in [1, f-1]` is an ell-th power.
pub fn thm16_cond2(ctx: &FieldCtx, params: &ParamSet) -> Result<bool> {
    factors_are_powers(ctx, params, params.f - 1)
}

/// Same as [`thm16_cond2`] with the column range halved.
pub fn thm16_cond3(ctx: &FieldCtx, params: &ParamSet) -> Result<bool> {
    factors_are_powers(ctx, params, params.f / 2)
}

/// Matrix criterion: `ind eta_(i,j) = 0 mod ell` for every row
/// `i in [0, ell-3]`, and `ind eta_(ell-2,j) + (q-1)/(ell f) = 0 mod ell`,
/// across all columns.
pub fn eta_matrix_condition(ctx: &FieldCtx, params: &ParamSet) -> Result<bool> {
    let (ell, f) = (params.ell, params.f);
    let shift = params.cofactor(ctx);
    for j in 1..f {
        for i in 0..=ell - 2 {
            let ind = ctx.ind(units::eta(ctx, params, i, j)?)?;
            let offset = if i == ell - 2 { shift } else { 0 };
            if (ind + offset) % ell != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `S(0, 1), ..., S(0, k-1)` all constant.
pub fn s_chain_condition_15(sc: &SumContext, k: u32) -> Result<bool> {
    check_k_range(sc.params().ell, k)?;
    Ok((1..u64::from(k)).all(|v| sc.s(0, v).in_r_prime()))
}

/// `S(0, 1), ..., S(k-2, 1)` all constant: the row form of the same chain.
pub fn s_chain_rows_15(sc: &SumContext, k: u32) -> Result<bool> {
    check_k_range(sc.params().ell, k)?;
    Ok((0..u64::from(k).saturating_sub(1)).all(|u| sc.s(u, 1).in_r_prime()))
}

/// `S(u, v)` constant on the full grid `u >= 0`, `v >= 1`, `u + v <= k-1`.
pub fn s_grid_15(sc: &SumContext, k: u32) -> Result<bool> {
    check_k_range(sc.params().ell, k)?;
    let k = u64::from(k);
    for v in 1..k {
        for u in 0..=(k - 1 - v) {
            if !sc.s(u, v).in_r_prime() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Chain criterion for divisibility by `pi^ell`: `S(u, 1)` constant for
/// `u in [0, ell-3]` and `S(ell-2, 1) + m (1 + t + ... + t^(f-1))`
/// constant, `m = (q-1)/(ell f)`.
pub fn s_chain_condition_16(sc: &SumContext) -> bool {
    let (ell, f) = (sc.params().ell, sc.params().f);
    for u in 0..ell.saturating_sub(2) {
        if !sc.s(u, 1).in_r_prime() {
            return false;
        }
    }
    let shifted = sc
        .s(ell - 2, 1)
        .add(&RElem::all_ones(ell, f, sc.cofactor() as i64));
    shifted.in_r_prime()
}

/// Column form of the `pi^ell` chain: `S(0, v)` constant for
/// `v in [1, ell-2]` and `S(0, ell-1) - m (1 + ... + t^(f-1))` constant.
pub fn s_chain_cols_16(sc: &SumContext) -> bool {
    let (ell, f) = (sc.params().ell, sc.params().f);
    for v in 1..=ell.saturating_sub(2) {
        if !sc.s(0, v).in_r_prime() {
            return false;
        }
    }
    let shifted = sc
        .s(0, ell - 1)
        .sub(&RElem::all_ones(ell, f, sc.cofactor() as i64));
    shifted.in_r_prime()
}

fn check_k_range(ell: u64, k: u32) -> Result<()> {
    if k < 1 || u64::from(k) > ell - 1 {
        return Err(Error::OutOfRange {
            what: "exponent k (must be in [1, ell-1])",
            value: i64::from(k),
        });
    }
    Ok(())
}

fn j_plus_one(ctx: &FieldCtx, ell: u64, f: u64) -> Result<CycInt> {
    let j = jacobi_sum(ctx, ell, f, ell as i64, f as i64)?;
    j.checked_add(&CycInt::from_integer(ell * f, 1))
}

fn eta_rows_are_powers(ctx: &FieldCtx, params: &ParamSet, k: u32, j_max: u64) -> Result<bool> {
    if k < 2 {
        return Ok(true);
    }
    for i in 0..=u64::from(k) - 2 {
        for j in 1..=j_max {
            if !ctx.is_ell_power(units::eta(ctx, params, i, j)?, params.ell)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn factors_are_powers(ctx: &FieldCtx, params: &ParamSet, j_max: u64) -> Result<bool> {
    let (ell, f) = (params.ell, params.f);
    if !(ctx.q() - 1).is_multiple_of(ell * ell * f) {
        return Ok(false);
    }
    for i in 0..ell {
        for j in 1..=j_max {
            if !ctx.is_ell_power(units::one_minus_xi(ctx, params, i, j), ell)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// One row of the `k`-indexed equivalence table.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Thm15Row {
    pub k: u32,
    pub cond1: bool,
    pub cond2: bool,
    pub cond3: bool,
    pub agree: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Thm16Row {
    pub cond1: bool,
    pub cond2: bool,
    pub cond3: bool,
    pub agree: bool,
}

/// Cross-check verdicts; every field should be true on a correct build.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CrossChecks {
    pub lemma44: bool,
    pub lemma61: bool,
    pub lemma71: bool,
    pub magnitude: bool,
    pub lemma92: bool,
}

/// Internal consistency results that do not belong to the serialized row
/// format but still gate the exit code.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyExtras {
    pub k_cap: u32,
    /// The reported floor hit the cap, so it is only a lower bound.
    pub val_floor_capped: bool,
    /// Per `k`: the three `S`-chain formulations all match cond1.
    pub schain15_agree: Vec<bool>,
    /// Both `pi^ell` chain formulations match thm16 cond1.
    pub schain16_agree: bool,
    pub omega_bridge: bool,
    pub index_congruences: bool,
    pub recursion_consequences: bool,
    /// Index table is a bijection and additive on sampled pairs.
    pub index_table_valid: bool,
    /// Residue-class products of `1 - g^a` factors match the `xi` factors.
    pub grouped_products: bool,
}

/// Everything known about one `(ell, f, q, g)` case.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerifyReport {
    pub ell: u64,
    pub f: u64,
    pub q: u64,
    pub g: u64,
    pub val_floor: u32,
    pub thm15: Vec<Thm15Row>,
    pub thm16: Thm16Row,
    pub checks: CrossChecks,
    #[serde(skip)]
    pub extra: VerifyExtras,
}

impl VerifyReport {
    /// All agreement flags and cross-checks, including the non-serialized
    /// extras.
    pub fn all_pass(&self) -> bool {
        self.thm15.iter().all(|r| r.agree)
            && self.thm16.agree
            && self.checks.lemma44
            && self.checks.lemma61
            && self.checks.lemma71
            && self.checks.magnitude
            && self.checks.lemma92
            && self.extra.schain15_agree.iter().all(|&a| a)
            && self.extra.schain16_agree
            && self.extra.omega_bridge
            && self.extra.index_congruences
            && self.extra.recursion_consequences
            && self.extra.index_table_valid
            && self.extra.grouped_products
    }

    /// Failure descriptions for diagnostics; empty iff `all_pass`.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        for r in &self.thm15 {
            if !r.agree {
                out.push(format!(
                    "pi^k criteria disagree at k={}: ({}, {}, {})",
                    r.k, r.cond1, r.cond2, r.cond3
                ));
            }
        }
        if !self.thm16.agree {
            out.push(format!(
                "pi^ell criteria disagree: ({}, {}, {})",
                self.thm16.cond1, self.thm16.cond2, self.thm16.cond3
            ));
        }
        let named = [
            (self.checks.lemma44, "tau closed form"),
            (self.checks.lemma61, "eta coefficient bridge"),
            (self.checks.lemma71, "recursion residuals"),
            (self.checks.magnitude, "magnitude"),
            (self.checks.lemma92, "eta matrix agreement"),
            (self.extra.schain16_agree, "pi^ell S-chain agreement"),
            (self.extra.omega_bridge, "omega bridge"),
            (self.extra.index_congruences, "index congruences"),
            (self.extra.recursion_consequences, "recursion consequences"),
            (self.extra.index_table_valid, "index table"),
            (self.extra.grouped_products, "grouped products"),
        ];
        for (ok, name) in named {
            if !ok {
                out.push(format!("{name} check failed"));
            }
        }
        for (idx, ok) in self.extra.schain15_agree.iter().enumerate() {
            if !ok {
                out.push(format!("S-chain disagreement at k={}", idx + 1));
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyOptions {
    /// Cap for the reported valuation floor; defaults to `ell`.
    pub k_cap: Option<u32>,
}

/// Evaluate every criterion for one case. Never fails on disagreement --
/// that is data; errors are reserved for invalid parameters.
pub fn verify(ctx: &FieldCtx, ell: u64, f: u64, options: VerifyOptions) -> Result<VerifyReport> {
    let params = ctx.derive_param_set(ell, f)?;
    let sc = SumContext::new(ctx, &params);
    let k_cap = options.k_cap.unwrap_or(ell as u32).max(1);

    let j = jacobi_sum(ctx, ell, f, ell as i64, f as i64)?;
    let j1 = j.checked_add(&CycInt::from_integer(ell * f, 1))?;
    let val_floor = valuation_floor(&j1, ell, f, k_cap)?;

    let mut thm15 = Vec::new();
    let mut schain15_agree = Vec::new();
    for k in 1..=(ell - 1) as u32 {
        let cond1 = pi_power_membership(&j1, ell, f, k)?;
        let cond2 = thm15_cond2(ctx, &params, k)?;
        let cond3 = thm15_cond3(ctx, &params, k)?;
        thm15.push(Thm15Row {
            k,
            cond1,
            cond2,
            cond3,
            agree: cond1 == cond2 && cond2 == cond3,
        });
        let chains = [
            s_chain_condition_15(&sc, k)?,
            s_chain_rows_15(&sc, k)?,
            s_grid_15(&sc, k)?,
        ];
        schain15_agree.push(chains.iter().all(|&c| c == cond1));
    }

    let t16c1 = pi_power_membership(&j1, ell, f, ell as u32)?;
    let t16c2 = thm16_cond2(ctx, &params)?;
    let t16c3 = thm16_cond3(ctx, &params)?;
    let thm16 = Thm16Row {
        cond1: t16c1,
        cond2: t16c2,
        cond3: t16c3,
        agree: t16c1 == t16c2 && t16c2 == t16c3,
    };

    let magnitude = j.checked_mul(&j.conj())? == CycInt::from_integer(ell * f, ctx.q());
    let checks = CrossChecks {
        lemma44: checks::tau_closed_form(&sc),
        lemma61: checks::eta_coefficient_bridge(&sc)?,
        lemma71: checks::recursion_residuals(&sc)?,
        magnitude,
        lemma92: eta_matrix_condition(ctx, &params)? == t16c1,
    };

    let extra = VerifyExtras {
        k_cap,
        val_floor_capped: val_floor == k_cap,
        schain15_agree,
        schain16_agree: s_chain_condition_16(&sc) == t16c1 && s_chain_cols_16(&sc) == t16c1,
        omega_bridge: checks::omega_bridge(&sc),
        index_congruences: units::index_congruence_suite(ctx, &params).is_ok(),
        recursion_consequences: checks::recursion_consequences(&sc)?,
        index_table_valid: checks::ind_bijectivity(ctx) && checks::ind_additivity(ctx, 64),
        grouped_products: checks::cyclotomic_product(&sc)?,
    };

    Ok(VerifyReport {
        ell,
        f,
        q: ctx.q(),
        g: ctx.g(),
        val_floor,
        thm15,
        thm16,
        checks,
        extra,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(q: u64) -> FieldCtx {
        FieldCtx::new(q, None).unwrap()
    }

    #[test]
    fn cond1_examples() {
        // k = 1 always holds
        for (q, ell, f) in [(7u64, 2u64, 3u64), (13, 2, 3), (7, 3, 2), (31, 3, 2)] {
            assert!(thm15_cond1(&ctx(q), ell, f, 1).unwrap());
        }
        assert!(!thm15_cond1(&ctx(7), 3, 2, 2).unwrap()); // 2 is not a cube mod 7
        assert!(thm15_cond1(&ctx(31), 3, 2, 2).unwrap()); // 4^3 = 2 mod 31
    }

    #[test]
    fn cond2_cond3_examples() {
        let c7 = ctx(7);
        let p7 = c7.derive_param_set(3, 2).unwrap();
        assert!(thm15_cond2(&c7, &p7, 1).unwrap()); // vacuous
        assert!(!thm15_cond2(&c7, &p7, 2).unwrap()); // eta_(0,1) = 2, not a cube

        let c31 = ctx(31);
        let p31 = c31.derive_param_set(3, 2).unwrap();
        assert!(thm15_cond2(&c31, &p31, 2).unwrap());

        // f = 2: the halved range equals the full range
        for k in 1..=2u32 {
            assert_eq!(
                thm15_cond2(&c31, &p31, k).unwrap(),
                thm15_cond3(&c31, &p31, k).unwrap()
            );
        }
    }

    #[test]
    fn k_range_enforced() {
        let c7 = ctx(7);
        let p7 = c7.derive_param_set(3, 2).unwrap();
        assert!(thm15_cond1(&c7, 3, 2, 0).is_err());
        assert!(thm15_cond1(&c7, 3, 2, 3).is_err());
        assert!(thm15_cond2(&c7, &p7, 5).is_err());
    }

    #[test]
    fn thm16_examples() {
        // (2,3,7): 7 != 1 mod 12, so cond2 fails, and cond1 fails too
        let c7 = ctx(7);
        let p7 = c7.derive_param_set(2, 3).unwrap();
        assert!(!thm16_cond1(&c7, 2, 3).unwrap());
        assert!(!thm16_cond2(&c7, &p7).unwrap());

        // (2,3,13): 13 = 1 mod 12 but 1 - xi_3 = 5 is a non-square mod 13
        let c13 = ctx(13);
        let p13 = c13.derive_param_set(2, 3).unwrap();
        assert_eq!(c13.q() % 12, 1);
        assert!(!thm16_cond2(&c13, &p13).unwrap());
        assert!(!thm16_cond1(&c13, 2, 3).unwrap());
    }

    #[test]
    fn eta_matrix_example() {
        let c7 = ctx(7);
        let p7 = c7.derive_param_set(2, 3).unwrap();
        assert!(!eta_matrix_condition(&c7, &p7).unwrap());
        assert_eq!(
            eta_matrix_condition(&c7, &p7).unwrap(),
            thm16_cond1(&c7, 2, 3).unwrap()
        );
    }

    #[test]
    fn s_chain_examples() {
        let c7 = ctx(7);
        let p7 = c7.derive_param_set(2, 3).unwrap();
        let sc = SumContext::new(&c7, &p7);
        // ell = 2: the k = 1 chain is empty
        assert!(s_chain_condition_15(&sc, 1).unwrap());
        // chain-16 requires S(0,1) + (1 + t + t^2) constant; it is 1 + t^2
        assert!(!s_chain_condition_16(&sc));
        assert!(!s_chain_cols_16(&sc));
    }

    #[test]
    fn verify_small_cases() {
        let r7 = verify(&ctx(7), 2, 3, VerifyOptions::default()).unwrap();
        assert!(r7.all_pass(), "failures: {:?}", r7.failures());
        assert_eq!(r7.val_floor, 1);
        assert!(r7.thm15[0].cond1 && r7.thm15[0].agree);
        assert!(!r7.thm16.cond1 && !r7.thm16.cond2 && r7.thm16.agree);

        let r31 = verify(&ctx(31), 3, 2, VerifyOptions::default()).unwrap();
        assert!(r31.all_pass(), "failures: {:?}", r31.failures());
        assert!(r31.thm15.iter().all(|row| row.cond1 && row.agree));
        assert!(r31.val_floor >= 2);

        let r7b = verify(&ctx(7), 3, 2, VerifyOptions::default()).unwrap();
        assert!(r7b.all_pass(), "failures: {:?}", r7b.failures());
        assert!(!r7b.thm15[1].cond1); // k = 2 fails: 2 is not a cube mod 7
        assert!(r7b.thm15[1].agree);
    }

    #[test]
    fn disagreement_reaches_failures_list() {
        let mut r = verify(&ctx(7), 2, 3, VerifyOptions::default()).unwrap();
        assert!(r.failures().is_empty());
        r.thm15[0].agree = false;
        r.checks.magnitude = false;
        r.extra.schain16_agree = false;
        assert!(!r.all_pass());
        let failures = r.failures().join("; ");
        assert!(failures.contains("k=1"));
        assert!(failures.contains("magnitude"));
        assert!(failures.contains("S-chain"));
    }

    #[test]
    fn monotone_in_k() {
        for (q, ell, f) in [(31u64, 3u64, 2u64), (11, 5, 2), (31, 5, 3), (41, 5, 2)] {
            let report = verify(&ctx(q), ell, f, VerifyOptions::default()).unwrap();
            let mut prev = true;
            for row in &report.thm15 {
                assert!(
                    prev || !row.cond1,
                    "q={q}: cond1 not monotone at k={}",
                    row.k
                );
                prev = row.cond1;
            }
        }
    }

    #[test]
    fn val_floor_cap_flagged() {
        let r = verify(&ctx(7), 2, 3, VerifyOptions { k_cap: Some(1) }).unwrap();
        assert_eq!(r.val_floor, 1);
        assert!(r.extra.val_floor_capped);
        let r2 = verify(&ctx(7), 2, 3, VerifyOptions { k_cap: Some(4) }).unwrap();
        assert_eq!(r2.val_floor, 1);
        assert!(!r2.extra.val_floor_capped);
    }

    #[test]
    fn report_serialization_shape() {
        let r = verify(&ctx(7), 2, 3, VerifyOptions::default()).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        // key order in the emitted bytes follows the declared row format
        let mut last = 0;
        for key in [
            "\"ell\"",
            "\"f\"",
            "\"q\"",
            "\"g\"",
            "\"val_floor\"",
            "\"thm15\"",
            "\"thm16\"",
            "\"checks\"",
            "\"lemma44\"",
            "\"lemma61\"",
            "\"lemma71\"",
            "\"magnitude\"",
            "\"lemma92\"",
        ] {
            let pos = text.find(key).unwrap_or_else(|| panic!("{key} missing"));
            assert!(pos >= last, "{key} out of order in {text}");
            last = pos;
        }
        let json: serde_json::Value = serde_json::from_str(&text).unwrap();
        let row = &json["thm15"][0];
        assert_eq!(row["k"], 1);
        assert!(row["agree"].as_bool().unwrap());
        for name in ["lemma44", "lemma61", "lemma71", "magnitude", "lemma92"] {
            assert!(json["checks"][name].as_bool().unwrap(), "{name}");
        }
        // extras never leak into the serialized row
        assert!(json.get("extra").is_none());
    }
}
