//! Deterministic report artifacts: typed rows, pass/fail summaries, and
//! the JSON and CSV serializations shared by every CLI command.

use std::collections::BTreeSet;
use std::fmt;
use std::fmt::Write as _;

use serde::Serialize;

use crate::double_indicators::IndicatorRow;
use crate::groups::GroupSpec;

/// Outcome of one check row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => write!(f, "pass"),
            Status::Fail => write!(f, "fail"),
            Status::Skip => write!(f, "skip"),
        }
    }
}

/// One named check outcome.
#[derive(Clone, Debug, Serialize)]
pub struct Finding {
    pub check: String,
    pub detail: String,
    pub status: Status,
}

impl Finding {
    pub fn new(check: &str, status: Status, detail: impl Into<String>) -> Finding {
        Finding { check: check.to_string(), detail: detail.into(), status }
    }

    pub fn pass(check: &str, detail: impl Into<String>) -> Finding {
        Finding::new(check, Status::Pass, detail)
    }

    pub fn skip(check: &str, detail: impl Into<String>) -> Finding {
        Finding::new(check, Status::Skip, detail)
    }

    /// Pass or fail depending on `ok`.
    pub fn checked(check: &str, ok: bool, detail: impl Into<String>) -> Finding {
        Finding::new(check, if ok { Status::Pass } else { Status::Fail }, detail)
    }
}

/// A report row: the spec it concerns, when any, plus either an indicator
/// comparison or a named finding.
#[derive(Clone, Debug, Serialize)]
pub struct Row {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spec: Option<GroupSpec>,
    #[serde(flatten)]
    pub body: RowBody,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum RowBody {
    Indicator(IndicatorRow),
    Finding(Finding),
}

/// Which row shape a report carries; fixes the CSV header.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowKind {
    Indicator,
    Finding,
}

/// Tallies over the rows of a report.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub specs: usize,
    pub rows: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub failures: Vec<String>,
}

/// Run metadata kept apart from the data rows.
#[derive(Clone, Debug, Serialize)]
pub struct Meta {
    pub command: String,
    pub grid: String,
}

/// Full command artifact; byte-deterministic for fixed inputs.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub meta: Meta,
    pub rows: Vec<Row>,
    pub summary: Summary,
    #[serde(skip)]
    kind: RowKind,
}

impl Report {
    pub fn new(command: impl Into<String>, grid: impl Into<String>, kind: RowKind) -> Report {
        Report {
            meta: Meta { command: command.into(), grid: grid.into() },
            rows: Vec::new(),
            summary: Summary::default(),
            kind,
        }
    }

    pub fn push_indicator(&mut self, spec: GroupSpec, row: IndicatorRow) {
        debug_assert_eq!(self.kind, RowKind::Indicator);
        self.rows.push(Row { spec: Some(spec), body: RowBody::Indicator(row) });
    }

    pub fn push_finding(&mut self, spec: Option<GroupSpec>, finding: Finding) {
        debug_assert_eq!(self.kind, RowKind::Finding);
        self.rows.push(Row { spec, body: RowBody::Finding(finding) });
    }

    /// Tally the rows into the summary; call once after all rows exist.
    pub fn finalize(&mut self) {
        let mut summary = Summary { rows: self.rows.len(), ..Summary::default() };
        let mut specs = BTreeSet::new();
        for row in &self.rows {
            if let Some(spec) = &row.spec {
                specs.insert(spec.to_string());
            }
            match &row.body {
                RowBody::Indicator(ind) => {
                    if ind.agree {
                        summary.passed += 1;
                    } else {
                        summary.failed += 1;
                        summary.failures.push(format!(
                            "{} {} m={}: formula={} brute={}",
                            spec_name(row),
                            ind.label,
                            ind.m,
                            opt_int(ind.nu_formula),
                            ind.nu_brute
                        ));
                    }
                }
                RowBody::Finding(f) => match f.status {
                    Status::Pass => summary.passed += 1,
                    Status::Skip => summary.skipped += 1,
                    Status::Fail => {
                        summary.failed += 1;
                        summary
                            .failures
                            .push(format!("{} {}: {}", spec_name(row), f.check, f.detail));
                    }
                },
            }
        }
        summary.specs = specs.len();
        self.summary = summary;
    }

    /// `0` when nothing failed, `1` otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.summary.failed == 0 {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("reports serialize");
        text.push('\n');
        text
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        match self.kind {
            RowKind::Indicator => out.push_str("spec,label,m,nu_formula,nu_brute,agree\n"),
            RowKind::Finding => out.push_str("spec,check,detail,status\n"),
        }
        for row in &self.rows {
            let spec = csv_field(&row.spec.map(|s| s.to_string()).unwrap_or_default());
            match &row.body {
                RowBody::Indicator(ind) => {
                    let formula =
                        ind.nu_formula.map(|v| v.to_string()).unwrap_or_default();
                    let _ = writeln!(
                        out,
                        "{spec},{},{},{formula},{},{}",
                        csv_field(&ind.label),
                        ind.m,
                        ind.nu_brute,
                        ind.agree
                    );
                }
                RowBody::Finding(f) => {
                    let _ = writeln!(
                        out,
                        "{spec},{},{},{}",
                        csv_field(&f.check),
                        csv_field(&f.detail),
                        f.status
                    );
                }
            }
        }
        out
    }
}

fn spec_name(row: &Row) -> String {
    row.spec.map(|s| s.to_string()).unwrap_or_else(|| "grid".to_string())
}

fn opt_int(value: Option<i64>) -> String {
    value.map(|v| v.to_string()).unwrap_or_else(|| "none".to_string())
}

fn csv_field(raw: &str) -> String {
    if raw.contains([',', '"', '\n']) {
        format!("\"{}\"", raw.replace('"', "\"\""))
    } else {
        raw.to_string()
    }
}
