//! Report-producing implementations of the CLI commands: structural info,
//! indicator tables, grid verification, and the themed scans.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::characters::{irreducible_characters, CharError};
use crate::double_indicators::{double_indicator_rows, IndicatorRow};
use crate::group_indicators::{group_indicator_table, nu_group_formula, IndicatorError};
use crate::groups::{split_applicability, verify_split, Group, GroupError, GroupSpec};

use super::checks::{
    arithmetic_check, negatives_findings, orthogonality_findings, splitting_hit, verify_spec,
    DOUBLE_TABLE_CEILING, GROUP_CHECK_CEILING, NEGATIVITY_CEILING,
};
use super::grid::Grid;
use super::report::{Finding, Report, RowBody, RowKind, Status};

/// Errors raised while assembling a report.
#[derive(Debug, Error)]
pub enum ScanError {
    /// The request itself is unserviceable, as opposed to a failed check.
    #[error("{0}")]
    Request(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Indicator(#[from] IndicatorError),
}

/// The themed grid scans offered by the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ScanKind {
    /// Classify which specs admit a negative double indicator.
    Negatives,
    /// Classify which specs have a totally orthogonal indicator matrix.
    Orthogonality,
    /// Hunt for twists where a power factor splits off without a center factor.
    Splitting,
    /// Recheck the arithmetic identities of the twist constants.
    Arithmetic,
}

impl fmt::Display for ScanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ScanKind::Negatives => "negatives",
            ScanKind::Orthogonality => "orthogonality",
            ScanKind::Splitting => "splitting",
            ScanKind::Arithmetic => "arithmetic",
        };
        f.write_str(name)
    }
}

/// Structural summary of one group.
pub fn cmd_info(spec: &GroupSpec) -> Result<Report, ScanError> {
    spec.validate()?;
    let group = Group::new(*spec)?;
    let mut report = Report::new("info", spec.to_string(), RowKind::Finding);
    let mut push = |finding: Finding| report.push_finding(Some(*spec), finding);

    push(Finding::pass("order", group.order().to_string()));
    push(Finding::pass("exponent", group.exponent().to_string()));
    match (spec, group.constants()) {
        (GroupSpec::Metacyclic { l, .. }, Some(gc)) => {
            push(Finding::pass(
                "center",
                format!("order {} = Z_{} x Z_{}", gc.c * l, gc.c, l),
            ));
            push(Finding::pass(
                "constants",
                format!(
                    "c={} d={} mod {} d'={} h={}",
                    gc.c,
                    gc.d_mod_kq,
                    gc.kq(),
                    gc.d_prime,
                    gc.h()
                ),
            ));
        }
        (GroupSpec::Quaternion { n }, _) => {
            push(Finding::pass("center", format!("order 2 = {{e, a{n}}}")));
        }
        _ => unreachable!("metacyclic groups always carry constants"),
    }

    let mut census: BTreeMap<usize, usize> = BTreeMap::new();
    for cl in group.classes() {
        *census.entry(cl.size()).or_default() += 1;
    }
    let buckets: Vec<String> = census
        .iter()
        .map(|(size, count)| {
            if *size == 1 {
                format!("{count} central")
            } else {
                format!("{count} of size {size}")
            }
        })
        .collect();
    push(Finding::pass(
        "classes",
        format!("{} total = {}", group.classes().len(), buckets.join(" + ")),
    ));
    let orders: Vec<String> = census
        .keys()
        .map(|size| format!("class size {size}: {}", group.order() / size))
        .collect();
    push(Finding::pass("centralizer_orders", orders.join("; ")));

    if let Some(gc) = group.constants() {
        let split = if spec.order() <= GROUP_CHECK_CEILING {
            verify_split(&group)?
        } else {
            split_applicability(gc)
        };
        let wording = |name: &str, applies: bool| {
            if applies {
                format!("{name} factor applies")
            } else {
                format!("{name} factor does not apply")
            }
        };
        push(Finding::pass(
            "splitting",
            format!(
                "{}; {}",
                wording("center", split.center_factor),
                wording("power", split.power_factor)
            ),
        ));
    }
    report.finalize();
    Ok(report)
}

/// Plain-text rendering of an info report.
pub fn info_text(report: &Report) -> String {
    let mut out = format!("spec: {}\n", report.meta.grid);
    for row in &report.rows {
        if let RowBody::Finding(finding) = &row.body {
            out.push_str(&format!("{}: {}\n", finding.check, finding.detail));
        }
    }
    out
}

/// Indicator table for one spec, for the group itself or for its double.
pub fn cmd_indicators(
    spec: &GroupSpec,
    double: bool,
    m_max: Option<u64>,
) -> Result<Report, ScanError> {
    spec.validate()?;
    let order = spec.order();
    if double && order > NEGATIVITY_CEILING {
        return Err(ScanError::Request(format!(
            "order {order} exceeds {NEGATIVITY_CEILING}; double tables are capped there"
        )));
    }
    if double && order > DOUBLE_TABLE_CEILING && m_max.is_none() {
        return Err(ScanError::Request(format!(
            "order {order} exceeds {DOUBLE_TABLE_CEILING}; pass --m-max to bound the table"
        )));
    }
    let group = Group::new(*spec)?;
    let m_max = m_max.unwrap_or(2 * group.exponent());
    let command = if double { "indicators --double" } else { "indicators" };
    let mut report = Report::new(command, spec.to_string(), RowKind::Indicator);
    if double {
        for row in double_indicator_rows(&group, m_max)? {
            report.push_indicator(*spec, row);
        }
    } else {
        let chars = irreducible_characters(&group)?;
        let table = group_indicator_table(&group, &chars, m_max)?;
        for (ci, chi) in chars.iter().enumerate() {
            for m in 1..=m_max {
                let nu_brute = table[(m - 1) as usize][ci];
                let nu_formula = nu_group_formula(spec, &chi.label, m)?;
                report.push_indicator(
                    *spec,
                    IndicatorRow {
                        label: chi.label.to_string(),
                        m,
                        nu_formula: Some(nu_formula),
                        nu_brute,
                        agree: nu_formula == nu_brute,
                    },
                );
            }
        }
    }
    report.finalize();
    Ok(report)
}

/// Cross-validation of every closed form against brute force over a grid.
pub fn cmd_verify(grid: &Grid, m_factor: u64) -> Result<Report, ScanError> {
    if m_factor == 0 {
        return Err(ScanError::Request("--m-factor must be at least 1".to_string()));
    }
    let specs = grid.all_specs();
    let mut report = Report::new("verify", grid.describe(), RowKind::Finding);
    let results: Vec<(GroupSpec, Vec<Finding>)> = specs
        .into_par_iter()
        .map(|spec| {
            let findings = verify_spec(&spec, m_factor);
            (spec, findings)
        })
        .collect();
    let mut specs_seen = 0usize;
    for (spec, findings) in results {
        specs_seen += 1;
        for finding in findings {
            report.push_finding(Some(spec), finding);
        }
    }
    if specs_seen == 0 {
        report.push_finding(None, Finding::pass("grid", "zero specs in the grid"));
    }
    report.finalize();
    Ok(report)
}

/// One themed scan over a grid.
pub fn cmd_scan(kind: ScanKind, grid: &Grid) -> Result<Report, ScanError> {
    let mut report = Report::new(format!("scan {kind}"), grid.describe(), RowKind::Finding);
    match kind {
        ScanKind::Negatives => per_spec_scan(grid, &mut report, negatives_findings),
        ScanKind::Orthogonality => per_spec_scan(grid, &mut report, orthogonality_findings),
        ScanKind::Splitting => splitting_scan(grid, &mut report),
        ScanKind::Arithmetic => arithmetic_scan(grid, &mut report),
    }
    report.finalize();
    Ok(report)
}

fn per_spec_scan(
    grid: &Grid,
    report: &mut Report,
    eval: fn(&GroupSpec, &mut Vec<Finding>),
) {
    let results: Vec<(GroupSpec, Vec<Finding>)> = grid
        .all_specs()
        .into_par_iter()
        .map(|spec| {
            let mut findings = Vec::new();
            eval(&spec, &mut findings);
            (spec, findings)
        })
        .collect();
    if results.is_empty() {
        report.push_finding(None, Finding::pass("grid", "zero specs in the grid"));
    }
    for (spec, findings) in results {
        for finding in findings {
            report.push_finding(Some(spec), finding);
        }
    }
}

struct TwistTally {
    twists: u64,
    checks: u64,
    findings: u64,
}

type TwistResult = (u64, u64, u64, u64, Option<Finding>);

fn twist_scan<F>(grid: &Grid, report: &mut Report, eval: F) -> BTreeMap<u64, TwistTally>
where
    F: Fn(u64, u64, u64) -> (u64, Option<Finding>) + Sync,
{
    let per_k: Vec<Vec<TwistResult>> = (2..grid.k_max.saturating_add(1))
        .into_par_iter()
        .map(|k| {
            let mut out = Vec::new();
            for &q in &grid.q_set {
                for n in 2..k {
                    if crate::exact_arith::mod_pow(n, q, k) == 1 {
                        let (checks, finding) = eval(k, q, n);
                        out.push((k, q, n, checks, finding));
                    }
                }
            }
            out
        })
        .collect();
    let mut tallies: BTreeMap<u64, TwistTally> = grid
        .q_set
        .iter()
        .map(|&q| (q, TwistTally { twists: 0, checks: 0, findings: 0 }))
        .collect();
    for (k, q, n, checks, finding) in per_k.into_iter().flatten() {
        let tally = tallies.get_mut(&q).expect("every q is tallied");
        tally.twists += 1;
        tally.checks += checks;
        if let Some(finding) = finding {
            tally.findings += 1;
            report.push_finding(Some(GroupSpec::metacyclic(k, q, n, 1)), finding);
        }
    }
    tallies
}

fn splitting_scan(grid: &Grid, report: &mut Report) {
    let tallies = twist_scan(grid, report, |k, q, n| {
        let finding = match splitting_hit(k, q, n) {
            Ok(Some(detail)) => {
                let status = if q == 2 { Status::Pass } else { Status::Fail };
                Some(Finding::new("splitting", status, detail))
            }
            Ok(None) => None,
            Err(err) => Some(Finding::new("splitting", Status::Fail, err.to_string())),
        };
        (1, finding)
    });
    for (q, tally) in tallies {
        report.push_finding(
            None,
            Finding::checked(
                "splitting_summary",
                q == 2 || tally.findings == 0,
                format!(
                    "q={q}: {} hits among {} twists with k<={}",
                    tally.findings, tally.twists, grid.k_max
                ),
            ),
        );
    }
}

fn arithmetic_scan(grid: &Grid, report: &mut Report) {
    let tallies = twist_scan(grid, report, |k, q, n| {
        let (checks, bad) = arithmetic_check(k, q, n);
        let finding = if bad.is_empty() {
            None
        } else {
            Some(Finding::new("arithmetic", Status::Fail, bad.join("; ")))
        };
        (checks, finding)
    });
    for (q, tally) in tallies {
        report.push_finding(
            None,
            Finding::checked(
                "arithmetic_summary",
                tally.findings == 0,
                format!(
                    "q={q}: {} checks across {} twists, {} violations, k<={}",
                    tally.checks, tally.twists, tally.findings, grid.k_max
                ),
            ),
        );
    }
}
