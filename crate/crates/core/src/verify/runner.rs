use std::collections::BTreeMap;
use std::time::Instant;

use crate::algebra::operators::Algebra;
use crate::parallel::{map_ordered, with_threads};
use crate::residual::{Comparison, Window};
use crate::sector::build_sector;
use crate::verify::registry::{registry, Check, GlobalCtx, IdentityRecord, SectorCtx, Suite};
use crate::verify::report::{IdentityResult, Status, VerificationReport};
use crate::{Error, Result};

/// Length scales of the scaling suite.
pub const SCALING_LAMBDAS: [f64; 3] = [0.5, 1.0, 2.0];

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub suite: Suite,
    pub kappas: Vec<i32>,
    pub n_max: usize,
    pub lambda: f64,
    /// Default tolerance for records without their own.
    pub tol: f64,
    /// Replaces every record's default guard.
    pub guard: Option<usize>,
    /// Worker threads; 0 lets the pool decide.
    pub jobs: usize,
    /// Record wall times; off gives byte-identical reports.
    pub timing: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            suite: Suite::All,
            kappas: (-4..=4).collect(),
            n_max: 12,
            lambda: 1.0,
            tol: 1e-10,
            guard: None,
            jobs: 0,
            timing: true,
        }
    }
}

/// Parse `"a..b"` (inclusive), `"a,b,c"` or a mix such as `"-4..-2,3"`.
pub fn parse_kappas(spec: &str) -> Result<Vec<i32>> {
    let bad = || Error::InvalidKappaSpec(spec.to_string());
    let mut out = Vec::new();
    for part in spec.split(',').map(str::trim) {
        if part.is_empty() {
            return Err(bad());
        }
        match part.split_once("..") {
            Some((a, b)) => {
                let a: i32 = a.trim().parse().map_err(|_| bad())?;
                let b: i32 = b.trim().parse().map_err(|_| bad())?;
                if a > b {
                    return Err(bad());
                }
                out.extend(a..=b);
            }
            None => out.push(part.parse().map_err(|_| bad())?),
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

struct Job {
    record: usize,
    kappa: Option<i32>,
}

fn merge_opt(acc: Option<Comparison>, c: Comparison) -> Option<Comparison> {
    Some(match acc {
        Some(a) => a.merge(c),
        None => c,
    })
}

/// Run every record of the suite for every κ and collect a deterministic report.
pub fn run_suite(cfg: &RunConfig) -> Result<VerificationReport> {
    if !(cfg.lambda.is_finite() && cfg.lambda > 0.0) {
        return Err(Error::InvalidLambda(cfg.lambda));
    }
    let mut kappas = cfg.kappas.clone();
    kappas.sort_unstable();
    kappas.dedup();
    let records: Vec<IdentityRecord> = registry().into_iter().filter(|r| cfg.suite.selects(r)).collect();
    let scaling = cfg.suite == Suite::Scaling;
    let lambdas: Vec<f64> = if scaling { SCALING_LAMBDAS.to_vec() } else { vec![cfg.lambda] };
    let needs = records.iter().filter_map(IdentityRecord::needs).max();

    let results = with_threads(cfg.jobs, || {
        let keys: Vec<(usize, i32)> = match needs {
            None => Vec::new(),
            Some(_) => (0..lambdas.len())
                .flat_map(|l| kappas.iter().map(move |&k| (l, k)))
                .filter(|&(l, k)| build_sector(k, cfg.n_max, lambdas[l]).is_ok_and(|s| !s.is_empty()))
                .collect(),
        };
        let built = map_ordered(&keys, |&(l, k)| {
            let s = build_sector(k, cfg.n_max, lambdas[l]).expect("validated above");
            SectorCtx::build(Algebra::new(s), needs.expect("keys exist only with needs"))
        });
        let mut contexts: Vec<BTreeMap<i32, SectorCtx>> = lambdas.iter().map(|_| BTreeMap::new()).collect();
        for ((l, k), ctx) in keys.into_iter().zip(built) {
            contexts[l].insert(k, ctx);
        }

        let jobs: Vec<Job> = records
            .iter()
            .enumerate()
            .flat_map(|(i, r)| match r.check {
                Check::Global { .. } => vec![Job { record: i, kappa: None }],
                Check::Sector { kappa_zero, .. } => kappas
                    .iter()
                    .filter(|&&k| !kappa_zero || k == 0)
                    .map(|&k| Job { record: i, kappa: Some(k) })
                    .collect(),
            })
            .collect();

        map_ordered(&jobs, |job| {
            let rec = &records[job.record];
            let start = Instant::now();
            let guard = match rec.check {
                Check::Global { .. } => 0,
                Check::Sector { .. } => cfg.guard.unwrap_or(rec.word_length),
            };
            let outcome = match (rec.check, job.kappa) {
                (Check::Global { run, .. }, _) => run(&GlobalCtx {
                    lambda: cfg.lambda,
                    n_max: cfg.n_max,
                    sectors: &contexts[0],
                }),
                (Check::Sector { run, .. }, Some(k)) => {
                    let mut acc = None;
                    let mut complete = true;
                    for per_lambda in &contexts {
                        let Some(ctx) = per_lambda.get(&k) else {
                            complete = false;
                            break;
                        };
                        let window = Window::new(*ctx.alg.sector(), guard);
                        if window.is_empty() {
                            complete = false;
                            break;
                        }
                        match run(ctx, &window) {
                            Some(c) => acc = merge_opt(acc, c),
                            None => {
                                complete = false;
                                break;
                            }
                        }
                    }
                    if complete {
                        acc
                    } else {
                        None
                    }
                }
                (Check::Sector { .. }, None) => None,
            };
            let elapsed = if cfg.timing { start.elapsed().as_secs_f64() * 1e3 } else { 0.0 };
            let tolerance = rec.tolerance.unwrap_or(cfg.tol);
            let (residual, excluded, status) = match outcome {
                None => (None, Vec::new(), Status::Skipped),
                Some(c) => {
                    let excluded = c.excluded.into_iter().collect();
                    if c.residual.is_finite() {
                        let status = if c.residual <= tolerance { Status::Pass } else { Status::Fail };
                        (Some(c.residual), excluded, status)
                    } else {
                        (None, excluded, Status::Fail)
                    }
                }
            };
            let paper_ref = if scaling {
                format!("{} (λ ∈ {{0.5, 1, 2}})", rec.paper_ref)
            } else {
                rec.paper_ref.to_string()
            };
            (
                (rec.suite, rec.id, job.kappa),
                IdentityResult {
                    id: rec.id.to_string(),
                    paper_ref,
                    kappa: job.kappa,
                    guard,
                    residual,
                    tolerance,
                    pass: status == Status::Pass,
                    excluded_blocks: excluded,
                    wall_time_ms: elapsed,
                    status,
                },
            )
        })
    });

    let mut results = results;
    results.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(VerificationReport {
        suite: cfg.suite.name().to_string(),
        lambda: cfg.lambda,
        n_max: cfg.n_max,
        kappas,
        results: results.into_iter().map(|(_, r)| r).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kappa_specs() {
        assert_eq!(parse_kappas("-4..4").unwrap(), (-4..=4).collect::<Vec<_>>());
        assert_eq!(parse_kappas("3,-1,3").unwrap(), vec![-1, 3]);
        assert_eq!(parse_kappas("-2..-1, 5").unwrap(), vec![-2, -1, 5]);
        assert_eq!(parse_kappas("0").unwrap(), vec![0]);
        for bad in ["", "a", "1..", "3..1", "1,,2"] {
            assert!(parse_kappas(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn coords_suite() {
        let cfg = RunConfig {
            suite: Suite::Coords,
            kappas: vec![0],
            n_max: 10,
            ..RunConfig::default()
        };
        let rep = run_suite(&cfg).unwrap();
        assert_eq!(rep.results.len(), 3);
        assert!(rep.results.iter().all(|r| r.pass));
    }

    #[test]
    fn empty_sector_is_skipped() {
        let cfg = RunConfig {
            suite: Suite::Su22,
            kappas: vec![5],
            n_max: 3,
            ..RunConfig::default()
        };
        let rep = run_suite(&cfg).unwrap();
        let per_kappa: Vec<_> = rep.results.iter().filter(|r| r.kappa.is_some()).collect();
        assert!(!per_kappa.is_empty());
        assert!(per_kappa.iter().all(|r| r.status == Status::Skipped && r.residual.is_none()));
        assert!(rep.all_pass());
    }

    #[test]
    fn bad_lambda() {
        let cfg = RunConfig {
            lambda: -1.0,
            ..RunConfig::default()
        };
        assert!(matches!(run_suite(&cfg), Err(Error::InvalidLambda(_))));
    }
}
