//! One line per acceptance criterion, then a single assertion over all of them.

use std::time::{Duration, Instant};

use ncmono::verify::{emit_report, run_suite, Format, IdentityResult, RunConfig, Status, Suite, VerificationReport};

struct Line {
    n: usize,
    ok: bool,
    detail: String,
}

fn run(suite: Suite, kappas: Vec<i32>, n_max: usize) -> (VerificationReport, Duration) {
    let cfg = RunConfig {
        suite,
        kappas,
        n_max,
        timing: false,
        ..RunConfig::default()
    };
    let t = Instant::now();
    let rep = run_suite(&cfg).expect("valid configuration");
    (rep, t.elapsed())
}

fn select<'a>(rep: &'a VerificationReport, ids: &[&str]) -> Vec<&'a IdentityResult> {
    rep.results.iter().filter(|r| ids.contains(&r.id.as_str())).collect()
}

/// All listed identities present, none failed, and worst residual within `tol`.
fn within(rep: &VerificationReport, ids: &[&str], tol: f64) -> (bool, String) {
    let rows = select(rep, ids);
    let present = ids.iter().all(|id| rows.iter().any(|r| r.id == *id));
    let worst = rows.iter().filter_map(|r| r.residual).fold(0.0, f64::max);
    let failed = rows.iter().filter(|r| r.status == Status::Fail).count();
    let ok = present && failed == 0 && worst <= tol && rows.iter().any(|r| r.status == Status::Pass);
    (ok, format!("{} results, worst residual {worst:.3e} (tol {tol:.0e})", rows.len()))
}

#[test]
fn acceptance() {
    let kappas: Vec<i32> = (-4..=4).collect();
    let mut lines = Vec::new();

    let (coords, t) = run(Suite::Coords, vec![0], 15);
    let (ok, d) = within(&coords, &["coords-commutator", "coords-radius", "coords-square"], 1e-13);
    lines.push(Line {
        n: 1,
        ok: ok && coords.results.len() == 3 && t < Duration::from_secs(5),
        detail: format!("coordinate algebra, n_max 15: {d}, {:.2}s", t.as_secs_f64()),
    });

    let (su22, t) = run(Suite::Su22, vec![], 0);
    let (ok, d) = within(&su22, &["su22-matrix-reality", "su22-matrix-closure"], 1e-15);
    lines.push(Line {
        n: 2,
        ok: ok && t < Duration::from_secs(1),
        detail: format!("matrix su(2,2), 15 generators / 105 pairs: {d}, {:.3}s", t.as_secs_f64()),
    });

    let t = Instant::now();
    let (full, _) = run(Suite::All, kappas.clone(), 12);
    let full_time = t.elapsed();

    let (ok, d) = within(&full, &["su22-closure"], 1e-12);
    lines.push(Line { n: 3, ok, detail: format!("operator su(2,2), guard 2, κ −4..4, n_max 12: {d}") });

    let (ok, d) = within(&full, &["su22-central"], 1e-14);
    lines.push(Line { n: 4, ok, detail: format!("(Ĉ+2)Ψ = κΨ per basis element: {d}") });

    let (ok, d) = within(&full, &["V-hermiticity"], 1e-12);
    lines.push(Line { n: 5, ok, detail: format!("weighted hermiticity of V̂, Ṽ, Û†: {d}") });

    let (ok_q, d_q) = within(&full, &["UU-order"], 1e-10);
    let (ok_b, d_b) = within(&full, &["Q-bounds"], 0.0);
    lines.push(Line {
        n: 6,
        ok: ok_q && ok_b,
        detail: format!("q-ordering, 16 index pairs: {d_q}; |Q−1| ≤ 2λ/r̂: {d_b}"),
    });

    let vv = ["VV-ij", "VV-k4", "VV-dual-ij", "VV-dual-k4", "VV-dual-44", "VV-contracted", "VV-expansions"];
    let (ok, d) = within(&full, &vv, 1e-10);
    lines.push(Line { n: 7, ok, detail: format!("velocity commutators and contracted forms: {d}") });

    let (ok_c, d_c) = within(&full, &["charge"], 1e-8);
    let (ok_l, d_l) = within(&full, &["charge-linearity"], 1e-8);
    let (ok_f, d_f) = within(&full, &["F-flat"], 1e-11);
    lines.push(Line {
        n: 8,
        ok: ok_c && ok_l && ok_f,
        detail: format!("charge κ/2: {d_c}; linearity: {d_l}; κ = 0 flat: {d_f}"),
    });

    let (small, _) = run(Suite::Monopole, kappas.clone(), 8);
    let (ok_a, d_a) = within(&full, &["VVV"], 1e-10);
    let (ok_s, d_s) = within(&small, &["VVV"], 1e-10);
    let (ok_b, d_b) = within(&full, &["VVV-baseline"], 1e-12);
    lines.push(Line {
        n: 9,
        ok: ok_a && ok_s && ok_b,
        detail: format!("associator n_max 12: {d_a}; n_max 8: {d_s}; baseline: {d_b}"),
    });

    let (ok, d) = within(&full, &["G-symmetry"], 1e-11);
    lines.push(Line { n: 10, ok, detail: format!("Ĝ symmetry: {d}") });

    let shift = ["UF-r", "UF-r2", "UF-inv-r", "zeta-w-r", "zeta-w-r2", "zeta-w-inv-r", "script-d"];
    let (ok, d) = within(&full, &shift, 1e-11);
    let reported = select(&full, &["script-d"])
        .iter()
        .any(|r| r.kappa == Some(0) && r.excluded_blocks == vec![0]);
    lines.push(Line {
        n: 11,
        ok: ok && reported,
        detail: format!("shift calculus: {d}; pole block reported: {reported}"),
    });

    let t = Instant::now();
    let (again, _) = run(Suite::All, kappas, 12);
    let second = t.elapsed();
    let a = emit_report(&full, Format::Json).unwrap();
    let b = emit_report(&again, Format::Json).unwrap();
    let ids: std::collections::BTreeSet<_> = full.results.iter().map(|r| r.id.as_str()).collect();
    let limit = Duration::from_secs(180);
    lines.push(Line {
        n: 12,
        ok: a == b && full.all_pass() && ids.len() >= 40 && full_time < limit && second < limit,
        detail: format!(
            "suite all, κ −4..4, n_max 12: {} identities, {} results, {:.1}s and {:.1}s, JSON identical: {}",
            ids.len(),
            full.results.len(),
            full_time.as_secs_f64(),
            second.as_secs_f64(),
            a == b
        ),
    });

    for l in &lines {
        println!("criterion {:>2}: {}  {}", l.n, if l.ok { "PASS" } else { "FAIL" }, l.detail);
    }
    let failed: Vec<usize> = lines.iter().filter(|l| !l.ok).map(|l| l.n).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
