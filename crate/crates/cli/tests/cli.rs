use std::process::{Command, Output};

fn ncmono(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncmono"))
        .args(args)
        .env_remove("NCMONO_JOBS")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn coords_suite_passes() {
    let out = ncmono(&["--suite", "coords", "--n-max", "10", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["suite"], "coords");
    assert_eq!(v["n_max"], 10);
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 3);
    for r in results {
        assert_eq!(r["pass"], true);
        assert!(r["residual"].as_f64().unwrap() <= r["tolerance"].as_f64().unwrap());
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["--suite", "nope"][..],
        &["--kappa", "3..1"],
        &["--format", "xml"],
        &["--lambda", "-1"],
        &["--n-max", "many"],
    ] {
        let out = ncmono(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn errata_fail_with_exit_1() {
    let out = ncmono(&["--suite", "errata", "--kappa", "1", "--n-max", "6"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("fail    printed-fierz"));
}

#[test]
fn empty_sector_is_skipped_not_failed() {
    let out = ncmono(&["--suite", "su22", "--kappa", "5", "--n-max", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let skipped = v["results"].as_array().unwrap().iter().filter(|r| r["status"] == "skipped").count();
    assert!(skipped > 0);
}

#[test]
fn csv_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.csv");
    let out = ncmono(&["--suite", "radial", "--kappa", "-1,2", "--n-max", "6", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let header = text.lines().next().unwrap();
    assert_eq!(
        header,
        "suite,lambda,n_max,id,paper_ref,kappa,guard,residual,tolerance,pass,excluded_blocks,wall_time_ms,status"
    );
    assert!(text.lines().count() > 10);
}

#[test]
fn unwritable_output_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("report.json");
    let out = ncmono(&["--suite", "coords", "--n-max", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cannot write"));
}

#[test]
fn deterministic_json_across_job_counts() {
    let base = ["--suite", "velocity", "--kappa", "-1..1", "--n-max", "6", "--format", "json", "--no-timing"];
    let a = ncmono(&[&base[..], &["--jobs", "1"]].concat());
    let b = Command::new(env!("CARGO_BIN_EXE_ncmono"))
        .args(base)
        .env("NCMONO_JOBS", "2")
        .output()
        .unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn monopole_zero_charge_branch() {
    let out = ncmono(&["--suite", "monopole", "--kappa", "0", "--n-max", "8", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let flat = v["results"].as_array().unwrap().iter().find(|r| r["id"] == "F-flat").unwrap();
    assert_eq!(flat["pass"], true);
    assert_eq!(flat["kappa"], 0);
}
