//! Command-line front end: single-case verification, prime sweeps, prime
//! listing, and the built-in self-test suite.
//!
//! Exit codes: 0 success, 1 usage or parameter error, 2 invariant or
//! equivalence failure.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use jacobi_sums::report;
use jacobi_sums::selftest::{self, SelftestConfig};
use jacobi_sums::sweep::{find_primes, run_sweep, Format, SweepSpec};
use jacobi_sums::theorems::{verify, VerifyOptions};
use jacobi_sums::FieldCtx;

#[derive(Parser)]
#[command(
    name = "jacobi-sums",
    version,
    about = "Exact Jacobi sums, their pi-adic valuation floors, and power-criterion sweeps"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify every criterion for a single prime q.
    Verify(VerifyArgs),
    /// Verify all primes q = 1 mod ell*f in a range.
    Sweep(SweepArgs),
    /// List the primes q = 1 mod ell*f in a range.
    Primes(PrimesArgs),
    /// Run the built-in invariant suites.
    Selftest(SelftestArgs),
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    ell: u64,
    #[arg(long)]
    f: u64,
    #[arg(long)]
    q: u64,
    /// Generator override; defaults to the smallest primitive root.
    #[arg(long)]
    g: Option<u64>,
    /// Cap for the reported valuation floor (default: ell).
    #[arg(long)]
    k_cap: Option<u32>,
    #[arg(long, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    ell: u64,
    #[arg(long)]
    f: u64,
    #[arg(long)]
    q_min: u64,
    #[arg(long)]
    q_max: u64,
    /// Generator override applied to every prime in the range.
    #[arg(long)]
    g: Option<u64>,
    /// Cap for the reported valuation floor (default: ell).
    #[arg(long)]
    k_cap: Option<u32>,
    /// Worker threads for the sweep (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PrimesArgs {
    #[arg(long)]
    ell: u64,
    #[arg(long)]
    f: u64,
    #[arg(long)]
    q_min: u64,
    #[arg(long)]
    q_max: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SelftestArgs {
    /// Randomized instances per binomial identity.
    #[arg(long, default_value_t = 10_000, hide = true)]
    cases: u64,
    #[arg(long, default_value_t = 0x6a73756d, hide = true)]
    seed: u64,
    /// Corrupt one check on purpose to exercise the failure path.
    #[arg(long, hide = true)]
    inject_fault: bool,
}

fn main() -> ExitCode {
    ExitCode::from(run())
}

fn run() -> u8 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return 0;
            }
            eprint!("{e}");
            return 1;
        }
    };
    match cli.cmd {
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Sweep(args) => cmd_sweep(args),
        Cmd::Primes(args) => cmd_primes(args),
        Cmd::Selftest(args) => cmd_selftest(args),
    }
}

fn cmd_verify(args: VerifyArgs) -> u8 {
    let ctx = match FieldCtx::new(args.q, args.g) {
        Ok(ctx) => ctx,
        Err(e) => return usage_error(&e),
    };
    let report = match verify(&ctx, args.ell, args.f, VerifyOptions { k_cap: args.k_cap }) {
        Ok(report) => report,
        Err(e) => return usage_error(&e),
    };
    let text = match args.format {
        Format::Json => {
            let mut line = report::render_row_json(&report);
            line.push('\n');
            line
        }
        Format::Csv => {
            let mut text = report::csv_header(report.ell);
            text.push_str(&report::csv_row(&report));
            text
        }
    };
    if let Err(code) = emit(&text, args.out.as_deref()) {
        return code;
    }
    if report.all_pass() {
        0
    } else {
        for failure in report.failures() {
            eprintln!("disagreement: {failure}");
        }
        2
    }
}

fn cmd_sweep(args: SweepArgs) -> u8 {
    let spec = SweepSpec {
        ell: args.ell,
        f: args.f,
        q_min: args.q_min,
        q_max: args.q_max,
        g_override: args.g,
        k_cap: args.k_cap,
        jobs: args.jobs,
        format: args.format,
    };
    if let Err(e) = spec.validate() {
        return usage_error(&e);
    }
    let file = match run_sweep(&spec) {
        Ok(file) => file,
        Err(e) => return usage_error(&e),
    };
    let text = report::render(&file, spec.format);
    if let Err(code) = emit(&text, args.out.as_deref()) {
        return code;
    }
    if file.all_pass() {
        0
    } else {
        for row in file.rows.iter().filter(|r| !r.all_pass()) {
            for failure in row.failures() {
                eprintln!("q={}: {failure}", row.q);
            }
        }
        2
    }
}

fn cmd_primes(args: PrimesArgs) -> u8 {
    let spec = SweepSpec::new(args.ell, args.f, args.q_min, args.q_max);
    if let Err(e) = spec.validate() {
        return usage_error(&e);
    }
    let mut text = String::new();
    for q in find_primes(args.ell, args.f, args.q_min, args.q_max) {
        text.push_str(&q.to_string());
        text.push('\n');
    }
    match emit(&text, args.out.as_deref()) {
        Ok(()) => 0,
        Err(code) => code,
    }
}

fn cmd_selftest(args: SelftestArgs) -> u8 {
    let report = selftest::run(SelftestConfig {
        cases_per_identity: args.cases,
        seed: args.seed,
        inject_fault: args.inject_fault,
    });
    for entry in &report.entries {
        let status = if entry.passed { "ok  " } else { "FAIL" };
        println!("{status} {} ({})", entry.name, entry.detail);
    }
    match report.first_failure() {
        None => {
            println!("selftest: all {} checks passed", report.entries.len());
            0
        }
        Some(first) => {
            eprintln!("selftest: first failing invariant: {}", first.name);
            2
        }
    }
}

fn usage_error(e: &dyn std::fmt::Display) -> u8 {
    eprintln!("error: {e}");
    1
}

fn emit(text: &str, out: Option<&std::path::Path>) -> Result<(), u8> {
    match out {
        None => {
            print!("{text}");
            std::io::stdout().flush().map_err(|e| {
                eprintln!("error: {e}");
                1u8
            })
        }
        Some(path) => std::fs::write(path, text).map_err(|e| {
            eprintln!("error: cannot write {}: {e}", path.display());
            1u8
        }),
    }
}
