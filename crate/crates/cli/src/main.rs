//! `ncmono`: run identity suites and emit a report.
//!
//! Exit status: 0 when nothing failed, 1 when any identity failed, 2 on a usage or
//! configuration error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;
use ncmono::verify::{emit_report, parse_kappas, run_suite, Format, RunConfig, Suite};

#[derive(Debug, Parser)]
#[command(name = "ncmono", version, about = "Verify operator identities of monopole sectors on R³_λ")]
struct Args {
    /// fock, coords, su22, radial, velocity, monopole, all, errata or scaling.
    #[arg(long, default_value = "all")]
    suite: String,

    /// Comma list or inclusive range, e.g. `-4..4` or `0,2,-3`.
    #[arg(long, default_value = "-4..4", allow_hyphen_values = true)]
    kappa: String,

    #[arg(long, default_value_t = 12)]
    n_max: usize,

    #[arg(long, default_value_t = 1.0)]
    lambda: f64,

    /// Default tolerance; identities with their own tolerance keep it.
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,

    /// Guard for every identity; defaults to each identity's word length.
    #[arg(long)]
    guard: Option<usize>,

    /// text, json or csv.
    #[arg(long, default_value = "text")]
    format: String,

    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Worker threads; defaults to all cores.
    #[arg(long, env = "NCMONO_JOBS")]
    jobs: Option<usize>,

    /// Write zero wall times so reports are byte-identical across runs.
    #[arg(long)]
    no_timing: bool,
}

fn config(args: &Args) -> anyhow::Result<(RunConfig, Format)> {
    let suite: Suite = args.suite.parse()?;
    let format: Format = args.format.parse()?;
    let kappas = parse_kappas(&args.kappa)?;
    if !(args.lambda.is_finite() && args.lambda > 0.0) {
        anyhow::bail!("--lambda must be positive, got {}", args.lambda);
    }
    if !(args.tol.is_finite() && args.tol >= 0.0) {
        anyhow::bail!("--tol must be non-negative, got {}", args.tol);
    }
    let cfg = RunConfig {
        suite,
        kappas,
        n_max: args.n_max,
        lambda: args.lambda,
        tol: args.tol,
        guard: args.guard,
        jobs: args.jobs.unwrap_or(0),
        timing: !args.no_timing,
    };
    Ok((cfg, format))
}

fn run(args: &Args) -> anyhow::Result<bool> {
    let (cfg, format) = config(args)?;
    let report = run_suite(&cfg)?;
    let bytes = emit_report(&report, format)?;
    match &args.out {
        Some(path) => std::fs::write(path, &bytes).with_context(|| format!("cannot write {}", path.display()))?,
        None => std::io::stdout().write_all(&bytes)?,
    }
    Ok(report.all_pass())
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(&args) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
