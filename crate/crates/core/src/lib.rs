//! Exact computation of Jacobi sums over prime fields and verification of
//! the equivalences between their pi-adic divisibility, cyclotomic-unit
//! power conditions, and residue-ring criteria.
//!
//! Everything is exact: big-integer cyclotomic coordinates, dense
//! discrete-log tables, and residue arithmetic mod small primes. The sweep
//! layer fans verification out over many primes `q`; with the `parallel`
//! feature (default) it uses a rayon pool, otherwise it runs sequentially.

pub mod binomial;
pub mod checks;
pub mod cyclotomic;
pub mod error;
pub mod ff;
pub mod jacobi;
pub mod report;
pub mod ringr;
pub mod selftest;
pub mod sums;
pub mod sweep;
pub mod theorems;
pub mod units;

pub use error::{Error, Result};
pub use ff::{FieldCtx, ParamSet};
pub use sweep::{ReportFile, SweepSpec};
pub use theorems::{verify, VerifyOptions, VerifyReport};
