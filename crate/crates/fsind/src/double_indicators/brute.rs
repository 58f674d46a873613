//! Brute-force double indicators: a centralizer-count path and an
//! orbit-trace path, evaluated exactly and cross-checked, plus a batched
//! sweep that verifies the closed forms over ranges of the power `m`.

use serde::Serialize;

use super::formula::nu_double_formula;
use super::labels::{enumerate_double_irreducibles, CentralizerChar, DoubleModuleLabel};
use super::trace::double_trace;
use super::IndicatorError;
use crate::exact_arith::{cyc_table, CycTable};
use crate::groups::{gm_set_product, GmSweep, Group};

/// One verification row for a simple module and one power.
#[derive(Clone, Debug, Serialize)]
pub struct IndicatorRow {
    pub label: String,
    pub m: u64,
    pub nu_formula: Option<i64>,
    pub nu_brute: i64,
    pub agree: bool,
}

fn reduce_to_integer(
    table: &CycTable,
    counts: &[i64],
    divisor: i64,
    context: impl Fn() -> String,
) -> Result<i64, IndicatorError> {
    let coords = table.reduce_counts(counts);
    if coords[1..].iter().any(|&c| c != 0) || coords[0] % divisor != 0 {
        return Err(IndicatorError::NotAnInteger(context()));
    }
    Ok(coords[0] / divisor)
}

/// `nu_m` by both brute paths, asserted equal:
/// the centralizer sum `(1/|C(s)|) sum_y z_m(s,y) eta(y)` and the orbit-trace
/// sum `(1/|G|) sum_{g in O} sum_{a in G_m(g)} tr(p_g . a^m)`.
pub fn nu_double_brute(
    group: &Group,
    label: &DoubleModuleLabel,
    m: u64,
) -> Result<i64, IndicatorError> {
    let conductor = group.exponent() as u32;
    let table = cyc_table(conductor);
    let cl = &group.classes()[label.class_index];

    let mut counts = vec![0i64; conductor as usize];
    for a in gm_set_product(group, cl.rep, m) {
        let y = group.pow_idx(a, m);
        for &e in label.eta_value(group, y).exponents() {
            counts[e as usize] += 1;
        }
    }
    let csize = (group.order() / cl.elements.len()) as i64;
    let by_counts = reduce_to_integer(&table, &counts, csize, || {
        format!("centralizer sum for {} at m={m}", label.id)
    })?;

    counts.fill(0);
    for &g in &cl.elements {
        for a in gm_set_product(group, g, m) {
            let y = group.pow_idx(a, m);
            for &e in double_trace(group, label, g, y).exponents() {
                counts[e as usize] += 1;
            }
        }
    }
    let by_traces = reduce_to_integer(&table, &counts, group.order() as i64, || {
        format!("orbit-trace sum for {} at m={m}", label.id)
    })?;

    assert_eq!(
        by_counts, by_traces,
        "brute paths disagree for {} at m={m}",
        label.id
    );
    Ok(by_counts)
}

/// Brute values for every enumerated label and every `m` in `1..=m_max`,
/// sharing sweeps per class; the two brute paths are cross-checked at the
/// level of centralizer count vectors for every `(class, m)`.
pub fn double_brute_table(
    group: &Group,
    labels: &[DoubleModuleLabel],
    m_max: u64,
) -> Result<Vec<Vec<i64>>, IndicatorError> {
    let conductor = group.exponent() as u32;
    let table = cyc_table(conductor);
    let order = group.order();

    let mut by_class: Vec<Vec<usize>> = vec![Vec::new(); group.classes().len()];
    for (idx, lab) in labels.iter().enumerate() {
        by_class[lab.class_index].push(idx);
    }

    let mut values: Vec<Vec<i64>> = vec![Vec::new(); labels.len()];
    for (ci, lab_idxs) in by_class.iter().enumerate() {
        if lab_idxs.is_empty() {
            continue;
        }
        let cl = &group.classes()[ci];
        let orbit = cl.elements.len();
        let csize = order / orbit;
        let cz = group.centralizer(cl.rep);
        debug_assert_eq!(cz.len(), csize);
        let mut pos = vec![usize::MAX; order];
        for (p, &y) in cz.iter().enumerate() {
            pos[y as usize] = p;
        }
        let rep_pos = cl.elements.iter().position(|&g| g == cl.rep).unwrap();
        let invs: Vec<u32> = cl.transversal.iter().map(|&w| group.inv_idx(w)).collect();
        let mut sweeps: Vec<GmSweep> =
            cl.elements.iter().map(|&g| GmSweep::new(group, g)).collect();

        let mut powm: Vec<u32> = (0..order as u32).collect();
        let mut z_rep = vec![0i64; csize];
        let mut z_orbit = vec![0i64; csize];
        let mut buckets = vec![0i64; conductor as usize];
        for m in 1..=m_max {
            for sweep in sweeps.iter_mut() {
                sweep.advance();
            }
            if m > 1 {
                for (a, p) in powm.iter_mut().enumerate() {
                    *p = group.mul_idx(*p, a as u32);
                }
            }
            z_rep.fill(0);
            z_orbit.fill(0);
            for (gpos, sweep) in sweeps.iter().enumerate() {
                let u = invs[gpos];
                for a in 0..order as u32 {
                    if !sweep.is_member(a) {
                        continue;
                    }
                    let y = powm[a as usize];
                    let t = group.conjugate(y, u);
                    z_orbit[pos[t as usize]] += 1;
                    if gpos == rep_pos {
                        z_rep[pos[y as usize]] += 1;
                    }
                }
            }
            for p in 0..csize {
                assert_eq!(
                    z_orbit[p],
                    z_rep[p] * orbit as i64,
                    "orbit-trace counts are |O| copies of the centralizer counts \
                     (class {ci}, m={m}, position {p})"
                );
            }
            for &li in lab_idxs {
                let lab = &labels[li];
                buckets.fill(0);
                match &lab.eta {
                    CentralizerChar::Linear(eta) => {
                        for (p, &y) in cz.iter().enumerate() {
                            if z_rep[p] == 0 {
                                continue;
                            }
                            let e = eta.exponent_at(y).expect("domain covers centralizer");
                            buckets[e as usize] += z_rep[p];
                        }
                    }
                    CentralizerChar::Group(chi) => {
                        for (p, &y) in cz.iter().enumerate() {
                            if z_rep[p] == 0 {
                                continue;
                            }
                            let value = chi.value_at_class(group.class_index_of(y) as usize);
                            for &e in value.exponents() {
                                buckets[e as usize] += z_rep[p];
                            }
                        }
                    }
                }
                let nu = reduce_to_integer(&table, &buckets, csize as i64, || {
                    format!("batched centralizer sum for {} at m={m}", lab.id)
                })?;
                values[li].push(nu);
            }
        }
    }
    Ok(values)
}

/// Formula-vs-brute rows for all simple modules and `m` in `1..=m_max`.
pub fn double_indicator_rows(
    group: &Group,
    m_max: u64,
) -> Result<Vec<IndicatorRow>, IndicatorError> {
    let labels = enumerate_double_irreducibles(group)?;
    let values = double_brute_table(group, &labels, m_max)?;
    let mut rows = Vec::with_capacity(labels.len() * m_max as usize);
    for (li, lab) in labels.iter().enumerate() {
        for m in 1..=m_max {
            let nu_brute = values[li][(m - 1) as usize];
            let nu_formula = nu_double_formula(group, lab, m)?;
            rows.push(IndicatorRow {
                label: lab.id.clone(),
                m,
                nu_formula: Some(nu_formula),
                nu_brute,
                agree: nu_formula == nu_brute,
            });
        }
    }
    Ok(rows)
}
