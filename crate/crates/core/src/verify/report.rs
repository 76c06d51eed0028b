use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityResult {
    pub id: String,
    pub paper_ref: String,
    /// `None` for κ-independent identities.
    pub kappa: Option<i32>,
    pub guard: usize,
    /// `None` when skipped.
    pub residual: Option<f64>,
    pub tolerance: f64,
    pub pass: bool,
    pub excluded_blocks: Vec<usize>,
    pub wall_time_ms: f64,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub lambda: f64,
    pub n_max: usize,
    #[serde(default)]
    pub kappas: Vec<i32>,
    pub results: Vec<IdentityResult>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.status != Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.results.iter().filter(|r| r.status == status).count()
    }

    /// The same report with every `wall_time_ms` zeroed.
    pub fn without_timing(mut self) -> Self {
        for r in &mut self.results {
            r.wall_time_ms = 0.0;
        }
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Serialize)]
struct CsvRow<'a> {
    suite: &'a str,
    lambda: f64,
    n_max: usize,
    id: &'a str,
    paper_ref: &'a str,
    kappa: Option<i32>,
    guard: usize,
    residual: Option<f64>,
    tolerance: f64,
    pass: bool,
    excluded_blocks: String,
    wall_time_ms: f64,
    status: &'a str,
}

fn join_blocks(blocks: &[usize]) -> String {
    blocks.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(";")
}

fn sci(x: f64) -> String {
    format!("{x:.3e}")
}

/// Serialize a report as JSON, CSV or a text table.
pub fn emit_report(report: &VerificationReport, format: Format) -> Result<Vec<u8>> {
    match format {
        Format::Json => {
            let mut out = serde_json::to_vec_pretty(report)?;
            out.push(b'\n');
            Ok(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in &report.results {
                w.serialize(CsvRow {
                    suite: &report.suite,
                    lambda: report.lambda,
                    n_max: report.n_max,
                    id: &r.id,
                    paper_ref: &r.paper_ref,
                    kappa: r.kappa,
                    guard: r.guard,
                    residual: r.residual,
                    tolerance: r.tolerance,
                    pass: r.pass,
                    excluded_blocks: join_blocks(&r.excluded_blocks),
                    wall_time_ms: r.wall_time_ms,
                    status: r.status.as_str(),
                })?;
            }
            w.into_inner().map_err(|e| Error::Io(e.into_error()))
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "suite {}  lambda {}  n_max {}  kappa {:?}",
                report.suite, report.lambda, report.n_max, report.kappas
            );
            let width = report.results.iter().map(|r| r.id.len()).max().unwrap_or(2).max(2);
            let _ = writeln!(
                s,
                "{:<7} {:<width$} {:>5} {:>5} {:>10} {:>10} {:>9}  excluded",
                "status", "id", "kappa", "guard", "residual", "tol", "ms"
            );
            for r in &report.results {
                let kappa = r.kappa.map_or("-".to_string(), |k| k.to_string());
                let residual = r.residual.map_or("-".to_string(), sci);
                let _ = writeln!(
                    s,
                    "{:<7} {:<width$} {:>5} {:>5} {:>10} {:>10} {:>9.1}  {}",
                    r.status.as_str(),
                    r.id,
                    kappa,
                    r.guard,
                    residual,
                    sci(r.tolerance),
                    r.wall_time_ms,
                    join_blocks(&r.excluded_blocks)
                );
            }
            let _ = writeln!(
                s,
                "{} pass, {} fail, {} skipped",
                report.count(Status::Pass),
                report.count(Status::Fail),
                report.count(Status::Skipped)
            );
            Ok(s.into_bytes())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> VerificationReport {
        VerificationReport {
            suite: "monopole".into(),
            lambda: 1.0,
            n_max: 8,
            kappas: vec![-1, 2],
            results: vec![IdentityResult {
                id: "comVV".into(),
                paper_ref: "[V̂_i,V̂_j] = …".into(),
                kappa: Some(2),
                guard: 2,
                residual: Some(1.234_567_890_123e-15),
                tolerance: 1e-10,
                pass: true,
                excluded_blocks: vec![0],
                wall_time_ms: 3.5,
                status: Status::Pass,
            }],
        }
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        let bytes = emit_report(&r, Format::Json).unwrap();
        let back: VerificationReport = serde_json::from_slice(&bytes).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn json_field_names() {
        let v: serde_json::Value = serde_json::from_slice(&emit_report(&sample(), Format::Json).unwrap()).unwrap();
        for k in ["suite", "lambda", "n_max", "results"] {
            assert!(v.get(k).is_some(), "{k}");
        }
        let row = &v["results"][0];
        for k in [
            "id",
            "paper_ref",
            "kappa",
            "guard",
            "residual",
            "tolerance",
            "pass",
            "excluded_blocks",
            "wall_time_ms",
        ] {
            assert!(row.get(k).is_some(), "{k}");
        }
        assert_eq!(row["status"], "pass");
    }

    #[test]
    fn empty_results() {
        let mut r = sample();
        r.results.clear();
        let v: serde_json::Value = serde_json::from_slice(&emit_report(&r, Format::Json).unwrap()).unwrap();
        assert_eq!(v["results"], serde_json::json!([]));
    }

    #[test]
    fn csv_has_header_and_row() {
        let text = String::from_utf8(emit_report(&sample(), Format::Csv).unwrap()).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "suite,lambda,n_max,id,paper_ref,kappa,guard,residual,tolerance,pass,excluded_blocks,wall_time_ms,status"
        );
        assert!(lines.next().unwrap().starts_with("monopole,1.0,8,comVV,"));
    }

    #[test]
    fn text_table() {
        let text = String::from_utf8(emit_report(&sample(), Format::Text).unwrap()).unwrap();
        assert!(text.contains("comVV"));
        assert!(text.ends_with("1 pass, 0 fail, 0 skipped\n"));
    }
}
