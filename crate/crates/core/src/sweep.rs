//! Sweeping the verification over every admissible prime in a range.
//!
//! Cases are independent, so the sweep is data-parallel over `q`. With the
//! `parallel` feature (on by default) rows are computed on a rayon pool
//! sized by `jobs`; the sequential path is always available and produces
//! identical output, which the bench suite and tests compare.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ff::{is_prime, FieldCtx};
use crate::theorems::{verify, VerifyOptions, VerifyReport};

/// Output encoding for report files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format {other:?} (expected json or csv)")),
        }
    }
}

/// Everything that defines one sweep run.
#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub ell: u64,
    pub f: u64,
    pub q_min: u64,
    pub q_max: u64,
    pub g_override: Option<u64>,
    pub k_cap: Option<u32>,
    pub jobs: Option<usize>,
    pub format: Format,
}

impl SweepSpec {
    pub fn new(ell: u64, f: u64, q_min: u64, q_max: u64) -> Self {
        Self {
            ell,
            f,
            q_min,
            q_max,
            g_override: None,
            k_cap: None,
            jobs: None,
            format: Format::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.ell == self.f || !is_prime(self.ell) || !is_prime(self.f) {
            return Err(Error::BadCharacterOrders {
                ell: self.ell,
                f: self.f,
            });
        }
        if self.q_min > self.q_max {
            return Err(Error::BadSweepBounds {
                q_min: self.q_min,
                q_max: self.q_max,
            });
        }
        if self.q_max > crate::ff::DEFAULT_TABLE_BOUND {
            return Err(Error::TableTooLarge {
                q: self.q_max,
                bound: crate::ff::DEFAULT_TABLE_BOUND,
            });
        }
        Ok(())
    }
}

/// Echo of the run parameters, written at the head of JSON reports.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ReportHeader {
    pub tool: &'static str,
    pub version: &'static str,
    pub ell: u64,
    pub f: u64,
    pub q_min: u64,
    pub q_max: u64,
    pub g: Option<u64>,
    pub k_cap: Option<u32>,
}

/// A completed sweep: header plus one row per prime, ascending in `q`
/// regardless of execution order.
#[derive(Debug, Clone, Serialize)]
pub struct ReportFile {
    pub header: ReportHeader,
    pub rows: Vec<VerifyReport>,
}

impl ReportFile {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.all_pass())
    }
}

/// Ascending primes `q = 1 mod ell*f` in `[q_min, q_max]`, by sieve.
pub fn find_primes(ell: u64, f: u64, q_min: u64, q_max: u64) -> Vec<u64> {
    let n = ell * f;
    if q_max < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; q_max as usize + 1];
    let mut out = Vec::new();
    for p in 2..=q_max {
        if composite[p as usize] {
            continue;
        }
        let mut m = p * p;
        while m <= q_max {
            composite[m as usize] = true;
            m += p;
        }
        if p >= q_min && p % n == 1 {
            out.push(p);
        }
    }
    out
}

fn verify_one(q: u64, spec: &SweepSpec) -> Result<VerifyReport> {
    let ctx = FieldCtx::new(q, spec.g_override)?;
    verify(&ctx, spec.ell, spec.f, VerifyOptions { k_cap: spec.k_cap })
}

/// Sequential sweep; the reference path for determinism comparisons.
pub fn run_sweep_sequential(spec: &SweepSpec) -> Result<ReportFile> {
    spec.validate()?;
    let rows = find_primes(spec.ell, spec.f, spec.q_min, spec.q_max)
        .into_iter()
        .map(|q| verify_one(q, spec))
        .collect::<Result<Vec<_>>>()?;
    Ok(assemble(spec, rows))
}

/// Sweep using a rayon pool sized by `spec.jobs` (0 or `None` = rayon's
/// default). Rows come back sorted by `q` whatever the schedule was.
#[cfg(feature = "parallel")]
pub fn run_sweep_parallel(spec: &SweepSpec) -> Result<ReportFile> {
    use rayon::prelude::*;

    spec.validate()?;
    let primes = find_primes(spec.ell, spec.f, spec.q_min, spec.q_max);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.jobs.unwrap_or(0))
        .build()
        .expect("thread pool");
    let mut rows = pool.install(|| {
        primes
            .par_iter()
            .map(|&q| verify_one(q, spec))
            .collect::<Result<Vec<_>>>()
    })?;
    rows.sort_by_key(|r| r.q);
    Ok(assemble(spec, rows))
}

/// Run the sweep with the best available strategy: the rayon pool when the
/// `parallel` feature is enabled, the sequential loop otherwise.
pub fn run_sweep(spec: &SweepSpec) -> Result<ReportFile> {
    #[cfg(feature = "parallel")]
    {
        run_sweep_parallel(spec)
    }
    #[cfg(not(feature = "parallel"))]
    {
        run_sweep_sequential(spec)
    }
}

fn assemble(spec: &SweepSpec, rows: Vec<VerifyReport>) -> ReportFile {
    debug_assert!(rows.windows(2).all(|w| w[0].q < w[1].q));
    ReportFile {
        header: ReportHeader {
            tool: "jacobi-sums",
            version: env!("CARGO_PKG_VERSION"),
            ell: spec.ell,
            f: spec.f,
            q_min: spec.q_min,
            q_max: spec.q_max,
            g: spec.g_override,
            k_cap: spec.k_cap,
        },
        rows,
    }
}
