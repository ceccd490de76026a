//! Built-in invariant suites runnable from the CLI without any arguments:
//! the eleven binomial identities on randomized instances, exhaustive
//! residue-ring enumeration, and the index/sum congruence suites on a set
//! of small hard-coded cases.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::binomial::identities;
use crate::checks;
use crate::ff::FieldCtx;
use crate::ringr::crt_enumeration_check;
use crate::sums::SumContext;
use crate::units;

/// Small `(q, ell, f)` cases covering every parameter shape the criteria
/// distinguish (both orders of each pair, k up to 6).
pub const BUILTIN_CASES: [(u64, u64, u64); 8] = [
    (7, 2, 3),
    (13, 2, 3),
    (7, 3, 2),
    (31, 3, 2),
    (11, 2, 5),
    (11, 5, 2),
    (31, 5, 3),
    (29, 2, 7),
];

pub const CRT_PAIRS: [(u64, u64); 5] = [(2, 3), (3, 2), (2, 5), (3, 5), (2, 7)];

#[derive(Debug, Clone)]
pub struct SelftestEntry {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct SelftestReport {
    pub entries: Vec<SelftestEntry>,
}

impl SelftestReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn first_failure(&self) -> Option<&SelftestEntry> {
        self.entries.iter().find(|e| !e.passed)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SelftestConfig {
    /// Randomized instances per binomial identity.
    pub cases_per_identity: u64,
    pub seed: u64,
    /// Deliberately corrupt the first identity check, to exercise the
    /// failure-reporting path end to end.
    pub inject_fault: bool,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        Self {
            cases_per_identity: 10_000,
            seed: 0x6a73756d,
            inject_fault: false,
        }
    }
}

pub fn run(config: SelftestConfig) -> SelftestReport {
    let mut entries = Vec::new();

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for (idx, name) in identities::NAMES.iter().enumerate() {
        let fault = config.inject_fault && idx == 0;
        let mut failed_at = None;
        for case in 0..config.cases_per_identity {
            if !identities::check_one(idx, &mut rng, fault) {
                failed_at = Some(case);
                break;
            }
        }
        entries.push(SelftestEntry {
            name: (*name).to_string(),
            passed: failed_at.is_none(),
            detail: match failed_at {
                None => format!("{} randomized instances", config.cases_per_identity),
                Some(case) => format!("failed at instance {case}"),
            },
        });
    }

    for (ell, f) in CRT_PAIRS {
        let ok = crt_enumeration_check(ell, f) == Some(true);
        entries.push(SelftestEntry {
            name: format!("residue-ring-enumeration-{ell}-{f}"),
            passed: ok,
            detail: format!("all {} elements enumerated", ell.pow(f as u32)),
        });
    }

    for (q, ell, f) in BUILTIN_CASES {
        let ctx = match FieldCtx::new(q, None) {
            Ok(ctx) => ctx,
            Err(e) => {
                entries.push(SelftestEntry {
                    name: format!("case-{q}-{ell}-{f}"),
                    passed: false,
                    detail: e.to_string(),
                });
                continue;
            }
        };
        let params = ctx.derive_param_set(ell, f).expect("built-in case valid");
        let sc = SumContext::new(&ctx, &params);
        let index_suite = units::index_congruence_suite(&ctx, &params);
        let named: Vec<(&str, bool, String)> = vec![
            (
                "index-congruences",
                index_suite.is_ok(),
                index_suite.err().unwrap_or_else(|| "all six parts".into()),
            ),
            (
                "tau-closed-form",
                checks::tau_closed_form(&sc),
                format!("all i in [0, {}]", ell - 1),
            ),
            (
                "eta-coefficient-bridge",
                checks::eta_coefficient_bridge(&sc).unwrap_or(false),
                "coefficients match indices".into(),
            ),
            (
                "recursion-residuals",
                checks::recursion_residuals(&sc).unwrap_or(false),
                "residuals constant".into(),
            ),
        ];
        for (suite, passed, detail) in named {
            entries.push(SelftestEntry {
                name: format!("{suite}-q{q}-{ell}-{f}"),
                passed,
                detail,
            });
        }
    }

    SelftestReport { entries }
}
