//! Per-spec check suites: structural closed forms, indicator agreement,
//! range theorems, and the negativity and orthogonality classifications,
//! all honoring explicit resource ceilings.

use crate::characters::irreducible_characters;
use crate::double_indicators::{
    double_brute_table, enumerate_double_irreducibles, negative_exists, nu_double_brute,
    nu_double_formula, DoubleModuleLabel, LabelKind,
};
use crate::exact_arith::{gcd, mod_mul, mod_signed};
use crate::group_indicators::{
    frobenius_root_count, group_indicator_table, nu_group_formula, total_orthogonality,
    IndicatorError,
};
use crate::groups::{
    gm_member_formula, split_applicability, verify_split, GmSweep, Group, GroupElement, GroupSpec,
};

use super::report::{Finding, Status};

/// Largest order for which the structure and group-indicator suites run.
pub const GROUP_CHECK_CEILING: u64 = 400;
/// Largest order for which the full double-indicator table is recomputed
/// by brute force.
pub const DOUBLE_TABLE_CEILING: u64 = 200;
/// Largest order for which the negativity classification is scanned.
pub const NEGATIVITY_CEILING: u64 = 512;

/// Whether the spec names a dihedral group: `Z_k x| Z_2` with the
/// inverting twist and trivial `l`.
pub fn is_dihedral(spec: &GroupSpec) -> bool {
    match *spec {
        GroupSpec::Metacyclic { k, q: 2, n, l: 1 } => (n + 1) % k == 0,
        _ => false,
    }
}

fn error_finding(check: &str, err: impl ToString) -> Finding {
    Finding::new(check, Status::Fail, err.to_string())
}

fn ceiling_skip(check: &str, order: u64, ceiling: u64) -> Finding {
    Finding::skip(check, format!("order {order} exceeds the ceiling {ceiling}"))
}

/// Every check suite for one spec, with explicit skip findings where a
/// resource ceiling applies.
pub fn verify_spec(spec: &GroupSpec, m_factor: u64) -> Vec<Finding> {
    let mut out = Vec::new();
    if let Err(err) = spec.validate() {
        out.push(error_finding("construction", err));
        return out;
    }
    let order = spec.order();
    if order > GROUP_CHECK_CEILING {
        out.push(ceiling_skip("structure", order, GROUP_CHECK_CEILING));
        out.push(ceiling_skip("group_indicators", order, GROUP_CHECK_CEILING));
    }
    if order > DOUBLE_TABLE_CEILING {
        out.push(ceiling_skip("double_indicators", order, DOUBLE_TABLE_CEILING));
    }
    if order > NEGATIVITY_CEILING {
        out.push(ceiling_skip("negativity_classification", order, NEGATIVITY_CEILING));
        return out;
    }
    let group = match Group::new(*spec) {
        Ok(group) => group,
        Err(err) => {
            out.push(error_finding("construction", err));
            return out;
        }
    };
    if order <= GROUP_CHECK_CEILING {
        structure_findings(&group, &mut out);
        group_findings(&group, m_factor, &mut out);
    }
    if order <= DOUBLE_TABLE_CEILING {
        double_findings(&group, m_factor, &mut out);
    } else {
        negativity_findings(&group, m_factor, true, &mut out);
    }
    out
}

pub fn structure_findings(group: &Group, out: &mut Vec<Finding>) {
    out.push(center_finding(group));
    out.push(census_finding(group));
    out.push(centralizer_finding(group));
    out.push(gm_finding(group));
    if group.constants().is_some() {
        out.push(split_finding(group));
    }
}

fn center_finding(group: &Group) -> Finding {
    let mut expected: Vec<u32> = match (group.spec(), group.constants()) {
        (GroupSpec::Metacyclic { k, q, l, .. }, Some(gc)) => {
            let mut centre = Vec::new();
            for jm in 0..l {
                for im in 0..gc.c {
                    centre.push(group.index_of(GroupElement::new(im * (k / gc.c), jm * q)));
                }
            }
            centre
        }
        (GroupSpec::Quaternion { n }, _) => {
            vec![group.index_of(GroupElement::IDENTITY), group.index_of(GroupElement::new(n, 0))]
        }
        _ => unreachable!("metacyclic groups always carry constants"),
    };
    expected.sort_unstable();
    let mut actual = group.center().to_vec();
    actual.sort_unstable();
    Finding::checked("center", expected == actual, format!("order {}", actual.len()))
}

fn census_finding(group: &Group) -> Finding {
    let mut central = 0u64;
    let mut small = 0u64;
    let mut large = 0u64;
    let mut bad: Option<String> = None;
    for cl in group.classes() {
        let rep = group.element_at(cl.rep);
        let size = cl.size() as u64;
        let expected_size = match group.spec() {
            GroupSpec::Metacyclic { k, q, .. } => {
                let c = group.constants().expect("metacyclic constants").c;
                if size == 1 {
                    central += 1;
                    1
                } else if rep.j.is_multiple_of(q) {
                    small += 1;
                    q
                } else {
                    large += 1;
                    k / c
                }
            }
            GroupSpec::Quaternion { n } => {
                if size == 1 {
                    central += 1;
                    1
                } else if rep.j == 0 {
                    small += 1;
                    2
                } else {
                    large += 1;
                    n
                }
            }
        };
        if size != expected_size && bad.is_none() {
            bad = Some(format!("class of {rep} has size {size}, expected {expected_size}"));
        }
    }
    let expected = match (group.spec(), group.constants()) {
        (GroupSpec::Metacyclic { k, q, l, .. }, Some(gc)) => {
            (gc.c * l, l * (k - gc.c) / q, gc.c * l * (q - 1))
        }
        (GroupSpec::Quaternion { n }, _) => (2, n - 1, 2),
        _ => unreachable!("metacyclic groups always carry constants"),
    };
    let ok = bad.is_none() && (central, small, large) == expected;
    Finding::checked(
        "class_census",
        ok,
        bad.unwrap_or_else(|| format!("central={central} small={small} large={large}")),
    )
}

fn centralizer_finding(group: &Group) -> Finding {
    let order = group.order() as u64;
    let mut bad: Option<String> = None;
    for cl in group.classes() {
        let rep = group.element_at(cl.rep);
        let expected = match group.spec() {
            GroupSpec::Metacyclic { k, q, l, .. } => {
                let c = group.constants().expect("metacyclic constants").c;
                if cl.size() == 1 {
                    order
                } else if rep.j.is_multiple_of(q) {
                    k * l
                } else {
                    c * q * l
                }
            }
            GroupSpec::Quaternion { n } => {
                if cl.size() == 1 {
                    4 * n
                } else if rep.j == 0 {
                    2 * n
                } else {
                    4
                }
            }
        };
        let actual = group.centralizer(cl.rep).len() as u64;
        if actual != expected || actual * cl.size() as u64 != order {
            bad = Some(format!("centralizer of {rep} has order {actual}, expected {expected}"));
            break;
        }
    }
    Finding::checked(
        "centralizer_orders",
        bad.is_none(),
        bad.unwrap_or_else(|| format!("{} classes", group.classes().len())),
    )
}

fn gm_finding(group: &Group) -> Finding {
    let order = group.order() as u32;
    let m_max = 2 * group.exponent();
    let points: Vec<u32> = if group.order() <= 64 {
        (0..order).collect()
    } else {
        group.classes().iter().map(|cl| cl.rep).collect()
    };
    let mut bad: Option<String> = None;
    'points: for &x in &points {
        let x_el = group.element_at(x);
        let mut sweep = GmSweep::new(group, x);
        for m in 1..=m_max {
            sweep.advance();
            for a in 0..order {
                let closed = gm_member_formula(group, x_el, group.element_at(a), m);
                if sweep.is_member(a) != closed {
                    bad = Some(format!("x={x_el} a={} m={m}", group.element_at(a)));
                    break 'points;
                }
            }
        }
    }
    Finding::checked(
        "gm_membership",
        bad.is_none(),
        bad.unwrap_or_else(|| format!("points={} m<={m_max}", points.len())),
    )
}

fn split_finding(group: &Group) -> Finding {
    let expected = split_applicability(group.constants().expect("metacyclic constants"));
    match verify_split(group) {
        Ok(report) => Finding::checked(
            "splitting",
            report == expected,
            format!(
                "center_factor={} power_factor={}",
                report.center_factor, report.power_factor
            ),
        ),
        Err(err) => error_finding("splitting", err),
    }
}

pub fn group_findings(group: &Group, m_factor: u64, out: &mut Vec<Finding>) {
    let spec = group.spec();
    let chars = match irreducible_characters(group) {
        Ok(chars) => chars,
        Err(err) => {
            out.push(error_finding("group_agreement", err));
            return;
        }
    };
    let m_max = m_factor * group.exponent();
    let table = match group_indicator_table(group, &chars, m_max) {
        Ok(table) => table,
        Err(err) => {
            out.push(error_finding("group_agreement", err));
            return;
        }
    };

    let mut disagreements = 0usize;
    let mut first: Option<String> = None;
    for (ci, chi) in chars.iter().enumerate() {
        for m in 1..=m_max {
            let brute = table[(m - 1) as usize][ci];
            match nu_group_formula(&spec, &chi.label, m) {
                Ok(formula) if formula == brute => {}
                Ok(formula) => {
                    disagreements += 1;
                    first.get_or_insert_with(|| {
                        format!("{} m={m}: formula={formula} brute={brute}", chi.label)
                    });
                }
                Err(err) => {
                    disagreements += 1;
                    first.get_or_insert_with(|| format!("{} m={m}: {err}", chi.label));
                }
            }
        }
    }
    out.push(Finding::checked(
        "group_agreement",
        disagreements == 0,
        match first {
            Some(msg) => format!("{disagreements} disagreements, first at {msg}"),
            None => format!("chars={} m_max={m_max}", chars.len()),
        },
    ));

    let mut range_bad: Option<String> = None;
    let mut nu2_bad: Option<String> = None;
    for (mi, row) in table.iter().enumerate() {
        let m = mi as u64 + 1;
        for (ci, &nu) in row.iter().enumerate() {
            let allowed = match spec {
                GroupSpec::Metacyclic { q, l, .. } => {
                    let qi = q as i64;
                    nu == 0
                        || nu == 1
                        || nu == qi - 1
                        || nu == qi
                        || (nu == -1 && l.is_multiple_of(q))
                }
                GroupSpec::Quaternion { .. } => (-1..=2).contains(&nu),
            };
            if !allowed && range_bad.is_none() {
                range_bad = Some(format!("{} m={m}: nu={nu}", chars[ci].label));
            }
            if m == 2 && !(-1..=1).contains(&nu) && nu2_bad.is_none() {
                nu2_bad = Some(format!("{}: nu_2={nu}", chars[ci].label));
            }
        }
    }
    out.push(Finding::checked(
        "group_range",
        range_bad.is_none(),
        range_bad.unwrap_or_else(|| "values within the allowed window".to_string()),
    ));
    if m_max >= 2 {
        out.push(Finding::checked(
            "group_nu2_range",
            nu2_bad.is_none(),
            nu2_bad.unwrap_or_else(|| "all nu_2 in {-1,0,1}".to_string()),
        ));
    }

    let mut frobenius_bad: Option<String> = None;
    for m in 1..=m_max {
        let total: i64 = chars
            .iter()
            .enumerate()
            .map(|(ci, chi)| table[(m - 1) as usize][ci] * chi.degree as i64)
            .sum();
        let roots = frobenius_root_count(group, m) as i64;
        if total != roots {
            frobenius_bad = Some(format!("m={m}: weighted sum {total}, root count {roots}"));
            break;
        }
    }
    out.push(Finding::checked(
        "frobenius_identity",
        frobenius_bad.is_none(),
        frobenius_bad.unwrap_or_else(|| format!("verified for m<={m_max}")),
    ));

    let classify = matches!(spec, GroupSpec::Metacyclic { l: 1, .. })
        || matches!(spec, GroupSpec::Quaternion { .. });
    if classify && m_max >= 2 {
        match total_orthogonality(group) {
            Ok(actual) => {
                let expected = is_dihedral(&spec);
                out.push(Finding::checked(
                    "orthogonality",
                    actual == expected,
                    format!("totally_orthogonal={actual} dihedral={expected}"),
                ));
            }
            Err(err) => out.push(error_finding("orthogonality", err)),
        }
    }
}

pub fn double_findings(group: &Group, m_factor: u64, out: &mut Vec<Finding>) {
    let spec = group.spec();
    let labels = match enumerate_double_irreducibles(group) {
        Ok(labels) => labels,
        Err(err) => {
            out.push(error_finding("double_agreement", err));
            return;
        }
    };
    let m_max = m_factor * group.exponent();
    let values = match double_brute_table(group, &labels, m_max) {
        Ok(values) => values,
        Err(err) => {
            out.push(error_finding("double_agreement", err));
            return;
        }
    };

    let mut disagreements = 0usize;
    let mut first: Option<String> = None;
    let mut nu2_bad: Option<String> = None;
    let mut witness: Option<String> = None;
    for (li, label) in labels.iter().enumerate() {
        for m in 1..=m_max {
            let brute = values[li][(m - 1) as usize];
            match nu_double_formula(group, label, m) {
                Ok(formula) if formula == brute => {}
                Ok(formula) => {
                    disagreements += 1;
                    first.get_or_insert_with(|| {
                        format!("{} m={m}: formula={formula} brute={brute}", label.id)
                    });
                }
                Err(err) => {
                    disagreements += 1;
                    first.get_or_insert_with(|| format!("{} m={m}: {err}", label.id));
                }
            }
            if m == 2 && !(-1..=1).contains(&brute) && nu2_bad.is_none() {
                nu2_bad = Some(format!("{}: nu_2={brute}", label.id));
            }
            if brute < 0 && witness.is_none() {
                witness = Some(format!("{} m={m} nu={brute}", label.id));
            }
        }
    }
    out.push(Finding::checked(
        "double_agreement",
        disagreements == 0,
        match first {
            Some(msg) => format!("{disagreements} disagreements, first at {msg}"),
            None => format!("labels={} m_max={m_max}", labels.len()),
        },
    ));
    if m_max >= 2 {
        out.push(Finding::checked(
            "double_nu2_range",
            nu2_bad.is_none(),
            nu2_bad.unwrap_or_else(|| "all nu_2 in {-1,0,1}".to_string()),
        ));
    }

    match spec {
        GroupSpec::Metacyclic { k, q, l, .. } => {
            if !l.is_multiple_of(q) {
                if q != 2 || !k.is_multiple_of(8) {
                    out.push(Finding::checked(
                        "double_nonnegative",
                        witness.is_none(),
                        witness
                            .clone()
                            .unwrap_or_else(|| "no negative values".to_string()),
                    ));
                }
                push_negativity_finding(&spec, witness.as_deref(), out);
            } else {
                out.push(Finding::skip(
                    "negativity_classification",
                    "no closed criterion when q divides l",
                ));
            }
        }
        GroupSpec::Quaternion { .. } => {
            push_negativity_finding(&spec, witness.as_deref(), out);
        }
    }
}

fn push_negativity_finding(spec: &GroupSpec, witness: Option<&str>, out: &mut Vec<Finding>) {
    match negative_exists(spec) {
        Ok(closed) => out.push(Finding::checked(
            "negativity_classification",
            closed == witness.is_some(),
            format!("closed_form={closed} witness={}", witness.unwrap_or("none")),
        )),
        Err(err) => out.push(error_finding("negativity_classification", err)),
    }
}

/// Negativity classification driven by the closed formulas, with the
/// witness and a deterministic sample replayed by brute force. Used where
/// the full brute table is over its ceiling.
pub fn negativity_findings(group: &Group, m_factor: u64, sample: bool, out: &mut Vec<Finding>) {
    let spec = group.spec();
    if let GroupSpec::Metacyclic { q, l, .. } = spec {
        if l.is_multiple_of(q) {
            out.push(Finding::skip(
                "negativity_classification",
                "no closed criterion when q divides l",
            ));
            return;
        }
    }
    let labels = match enumerate_double_irreducibles(group) {
        Ok(labels) => labels,
        Err(err) => {
            out.push(error_finding("negativity_classification", err));
            return;
        }
    };
    let m_max = m_factor * group.exponent();
    let witness = match negative_witness_fast(group, &labels, m_max) {
        Ok(witness) => witness,
        Err(err) => {
            out.push(error_finding("negativity_classification", err));
            return;
        }
    };
    let detail = match &witness {
        Some((id, m, nu)) => format!("witness={id} m={m} nu={nu}"),
        None => "witness=none".to_string(),
    };
    match negative_exists(&spec) {
        Ok(closed) => out.push(Finding::checked(
            "negativity_classification",
            closed == witness.is_some(),
            format!("closed_form={closed} {detail}"),
        )),
        Err(err) => out.push(error_finding("negativity_classification", err)),
    }
    if sample {
        out.push(sample_finding(group, &labels));
    }
}

/// Scan the closed formulas for a negative value and replay any hit by
/// brute force. For metacyclic specs with `q` prime to `l` only type II
/// modules can take negative values, so the scan restricts to them.
fn negative_witness_fast(
    group: &Group,
    labels: &[DoubleModuleLabel],
    m_max: u64,
) -> Result<Option<(String, u64, i64)>, IndicatorError> {
    let scan: Vec<&DoubleModuleLabel> = match group.spec() {
        GroupSpec::Metacyclic { q, l, .. } if !l.is_multiple_of(q) => labels
            .iter()
            .filter(|label| matches!(label.kind, LabelKind::TypeII))
            .collect(),
        _ => labels.iter().collect(),
    };
    for m in 1..=m_max {
        for label in &scan {
            let nu = nu_double_formula(group, label, m)?;
            if nu < 0 {
                let brute = nu_double_brute(group, label, m)?;
                assert_eq!(brute, nu, "negative witness must replay by brute force");
                return Ok(Some((label.id.clone(), m, nu)));
            }
        }
    }
    Ok(None)
}

fn sample_finding(group: &Group, labels: &[DoubleModuleLabel]) -> Finding {
    let powers = match group.spec() {
        GroupSpec::Metacyclic { q, .. } => [1, 2, q],
        GroupSpec::Quaternion { .. } => [1, 2, 4],
    };
    let stride = (labels.len() / 12).max(1);
    let mut checked = 0usize;
    let mut bad: Option<String> = None;
    'labels: for label in labels.iter().step_by(stride) {
        for &m in &powers {
            let formula = match nu_double_formula(group, label, m) {
                Ok(v) => v,
                Err(err) => {
                    bad = Some(format!("{} m={m}: {err}", label.id));
                    break 'labels;
                }
            };
            let brute = match nu_double_brute(group, label, m) {
                Ok(v) => v,
                Err(err) => {
                    bad = Some(format!("{} m={m}: {err}", label.id));
                    break 'labels;
                }
            };
            checked += 1;
            if formula != brute {
                bad = Some(format!("{} m={m}: formula={formula} brute={brute}", label.id));
                break 'labels;
            }
        }
    }
    Finding::checked(
        "double_sample_agreement",
        bad.is_none(),
        bad.unwrap_or_else(|| format!("{checked} sampled values agree")),
    )
}

/// Negativity scan row for one spec of the `negatives` scan.
pub fn negatives_findings(spec: &GroupSpec, out: &mut Vec<Finding>) {
    let order = spec.order();
    if order > NEGATIVITY_CEILING {
        out.push(ceiling_skip("negatives", order, NEGATIVITY_CEILING));
        return;
    }
    if let GroupSpec::Metacyclic { q, l, .. } = *spec {
        if l.is_multiple_of(q) {
            out.push(Finding::skip("negatives", "no closed criterion when q divides l"));
            return;
        }
    }
    let group = match Group::new(*spec) {
        Ok(group) => group,
        Err(err) => {
            out.push(error_finding("negatives", err));
            return;
        }
    };
    let labels = match enumerate_double_irreducibles(&group) {
        Ok(labels) => labels,
        Err(err) => {
            out.push(error_finding("negatives", err));
            return;
        }
    };
    let m_max = 2 * group.exponent();
    match (negative_exists(spec), negative_witness_fast(&group, &labels, m_max)) {
        (Ok(closed), Ok(witness)) => {
            let detail = match &witness {
                Some((id, m, nu)) => format!("closed_form={closed} witness={id} m={m} nu={nu}"),
                None => format!("closed_form={closed} witness=none"),
            };
            out.push(Finding::checked("negatives", closed == witness.is_some(), detail));
        }
        (Err(err), _) => out.push(error_finding("negatives", err)),
        (_, Err(err)) => out.push(error_finding("negatives", err)),
    }
}

/// Orthogonality scan row for one spec: list the flag, and check the
/// dihedral classification where it applies.
pub fn orthogonality_findings(spec: &GroupSpec, out: &mut Vec<Finding>) {
    let order = spec.order();
    if order > GROUP_CHECK_CEILING {
        out.push(ceiling_skip("orthogonality", order, GROUP_CHECK_CEILING));
        return;
    }
    let group = match Group::new(*spec) {
        Ok(group) => group,
        Err(err) => {
            out.push(error_finding("orthogonality", err));
            return;
        }
    };
    let actual = match total_orthogonality(&group) {
        Ok(actual) => actual,
        Err(err) => {
            out.push(error_finding("orthogonality", err));
            return;
        }
    };
    let classified = matches!(spec, GroupSpec::Metacyclic { l: 1, .. })
        || matches!(spec, GroupSpec::Quaternion { .. });
    if classified {
        let expected = is_dihedral(spec);
        out.push(Finding::checked(
            "orthogonality",
            actual == expected,
            format!("totally_orthogonal={actual} dihedral={expected}"),
        ));
    } else {
        out.push(Finding::pass(
            "orthogonality",
            format!("totally_orthogonal={actual}, not classified for l>1"),
        ));
    }
}

/// The direct-factor splitting predicate scanned over twists: a power
/// factor without a center factor.
pub fn splitting_hit(k: u64, q: u64, n: u64) -> Result<Option<String>, IndicatorError> {
    let gc = GroupSpec::metacyclic(k, q, n, 1).constants()?;
    let report = split_applicability(&gc);
    if report.power_factor && !report.center_factor {
        Ok(Some(format!(
            "c={} d={} h={}: power factor without center factor",
            gc.c,
            gc.d_mod_k(),
            report.h
        )))
    } else {
        Ok(None)
    }
}

/// Arithmetic invariants of the constants for one twist, recomputed from
/// scratch; returns the number of checks made and any violations.
pub fn arithmetic_check(k: u64, q: u64, n: u64) -> (u64, Vec<String>) {
    let mut checks = 0u64;
    let mut bad = Vec::new();
    let kq = k * q;
    let mut d = 0u64;
    let mut power = 1u64;
    for _ in 0..q {
        d = (d + power) % kq;
        power = mod_mul(power, n, kq);
    }
    let c = gcd(n - 1, k);

    let mut check = |ok: bool, msg: String| {
        checks += 1;
        if !ok {
            bad.push(msg);
        }
    };
    check((d % k).is_multiple_of(k / c), format!("k/c={} does not divide d={d}", k / c));
    check(d % c == q % c, format!("d={d} is not q={q} mod c={c}"));
    check(
        k.is_multiple_of(q) == c.is_multiple_of(q),
        format!("q={q} divides exactly one of k={k} and c={c}"),
    );
    if k.is_multiple_of(q) {
        check(d.is_multiple_of(q), format!("q={q} divides k={k} but not d={d}"));
    }
    if q > 2 {
        let qq = q * q;
        let mut d_qq = 0u64;
        let mut power = 1u64;
        for _ in 0..q {
            d_qq = (d_qq + power) % qq;
            power = mod_mul(power, n, qq);
        }
        check(d_qq != 0, format!("q^2={qq} divides d for n={n}"));

        let mut weighted = 0u64;
        let mut power = 1u64;
        for j in 0..q - 1 {
            weighted = (weighted + mod_mul(j + 1, power, q)) % q;
            power = mod_mul(power, n, q);
        }
        let scaled = mod_mul(mod_signed(n as i128 - 1, q), weighted, q);
        check(
            (scaled + d).is_multiple_of(q),
            format!("(n-1) times the weighted sum is not -d mod q for n={n}"),
        );
        if d.is_multiple_of(q) {
            check(weighted == 0, format!("q={q} divides d but not the weighted sum"));
            check(
                mod_mul(d, mod_signed(d as i128 - q as i128, kq), kq) == 0,
                format!("kq={kq} does not divide d(d-q) with d={d}"),
            );
        }
    }
    for j in 1..=q.min(8) {
        let m = q * j;
        let r = k / gcd(m, k);
        for t in 1..=3u64 {
            let rt = r * t;
            check(
                mod_mul(mod_mul(m % kq, d, kq), rt % kq, kq) == 0,
                format!("kq does not divide mdr at m={m} r={rt}"),
            );
        }
    }
    let bound = k.min(24);
    for j in 1..=bound {
        let m = q * j;
        for r in 1..=bound {
            if mod_mul(m % k, r % k, k) == 0 {
                check(
                    mod_mul(mod_mul(m % kq, d, kq), r % kq, kq) == 0,
                    format!("kq does not divide mdr at m={m} r={r}"),
                );
            }
        }
    }
    (checks, bad)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn statuses(findings: &[Finding]) -> Vec<(String, Status)> {
        findings.iter().map(|f| (f.check.clone(), f.status)).collect()
    }

    #[test]
    fn dihedral_predicate() {
        assert!(is_dihedral(&GroupSpec::metacyclic(5, 2, 4, 1)));
        assert!(is_dihedral(&GroupSpec::metacyclic(12, 2, 11, 1)));
        assert!(!is_dihedral(&GroupSpec::metacyclic(12, 2, 5, 1)));
        assert!(!is_dihedral(&GroupSpec::metacyclic(5, 2, 4, 2)));
        assert!(!is_dihedral(&GroupSpec::quaternion(3)));
    }

    #[test]
    fn verify_clean_fixture_passes_every_suite() {
        for spec in [GroupSpec::metacyclic(8, 2, 3, 1), GroupSpec::quaternion(2)] {
            let findings = verify_spec(&spec, 2);
            assert!(
                findings.iter().all(|f| f.status == Status::Pass),
                "{spec}: {:?}",
                statuses(&findings)
            );
            assert!(findings.iter().any(|f| f.check == "double_agreement"));
            assert!(findings.iter().any(|f| f.check == "negativity_classification"));
        }
    }

    #[test]
    fn verify_skips_over_the_ceilings() {
        let spec = GroupSpec::metacyclic(150, 2, 149, 1);
        let findings = verify_spec(&spec, 2);
        assert!(findings
            .iter()
            .any(|f| f.check == "double_indicators" && f.status == Status::Skip));
        assert!(findings
            .iter()
            .any(|f| f.check == "negativity_classification" && f.status == Status::Pass));
        assert!(findings
            .iter()
            .any(|f| f.check == "double_sample_agreement" && f.status == Status::Pass));

        let huge = GroupSpec::metacyclic(400, 2, 399, 4);
        let findings = verify_spec(&huge, 2);
        assert!(findings.iter().all(|f| f.status == Status::Skip));
    }

    #[test]
    fn verify_reports_invalid_specs_as_failures() {
        let findings = verify_spec(&GroupSpec::metacyclic(5, 2, 2, 1), 2);
        assert_eq!(findings.len(), 1);
        assert_eq!(findings[0].status, Status::Fail);
        assert!(findings[0].detail.contains("order dividing q"));
    }

    #[test]
    fn negatives_rows_on_known_specs() {
        let mut out = Vec::new();
        negatives_findings(&GroupSpec::metacyclic(24, 2, 19, 1), &mut out);
        assert_eq!(out[0].status, Status::Pass);
        assert!(out[0].detail.contains("closed_form=true"));
        assert!(out[0].detail.contains("nu=-1"));

        out.clear();
        negatives_findings(&GroupSpec::metacyclic(12, 2, 11, 1), &mut out);
        assert_eq!(out[0].status, Status::Pass);
        assert!(out[0].detail.contains("closed_form=false witness=none"));

        out.clear();
        negatives_findings(&GroupSpec::metacyclic(12, 2, 5, 2), &mut out);
        assert_eq!(out[0].status, Status::Skip);

        out.clear();
        negatives_findings(&GroupSpec::quaternion(3), &mut out);
        assert_eq!(out[0].status, Status::Pass);
        assert!(out[0].detail.contains("closed_form=true"));
    }

    #[test]
    fn orthogonality_rows_classify_dihedral_groups() {
        let mut out = Vec::new();
        orthogonality_findings(&GroupSpec::metacyclic(5, 2, 4, 1), &mut out);
        assert_eq!(out[0].status, Status::Pass);
        assert!(out[0].detail.contains("totally_orthogonal=true dihedral=true"));

        out.clear();
        orthogonality_findings(&GroupSpec::quaternion(2), &mut out);
        assert!(out[0].detail.contains("totally_orthogonal=false dihedral=false"));

        out.clear();
        orthogonality_findings(&GroupSpec::metacyclic(5, 2, 4, 2), &mut out);
        assert!(out[0].detail.contains("not classified"));
    }

    #[test]
    fn splitting_hits_match_the_applicability_table() {
        assert!(splitting_hit(12, 2, 7).unwrap().is_some());
        assert!(splitting_hit(12, 2, 5).unwrap().is_none());
        assert!(splitting_hit(33, 2, 10).unwrap().is_none());
        assert!(splitting_hit(7, 3, 2).unwrap().is_none());
    }

    #[test]
    fn arithmetic_checks_are_clean_on_small_twists() {
        for (k, q, n) in [(8, 2, 3), (9, 3, 7), (11, 5, 3), (15, 2, 11), (31, 5, 2)] {
            let (checks, bad) = arithmetic_check(k, q, n);
            assert!(checks > 0);
            assert!(bad.is_empty(), "k={k} q={q} n={n}: {bad:?}");
        }
    }
}
