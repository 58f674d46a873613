//! Irreducible character tables for both group families, built from closed
//! forms and validated against exact orthogonality and generic induction.

use num::BigInt;

use super::linear::LinearCharacter;
use super::root_sum::RootSum;
use super::CharError;
use crate::exact_arith::{cyc_table, mod_mul, mod_pow};
use crate::groups::{Group, GroupSpec};

/// Parameter label identifying an irreducible character.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CharLabel {
    /// `chi_{s,t}(a^i b^j) = zeta_c^{t i} zeta_{ql}^{s j}`.
    LinearMeta { s: u64, t: u64 },
    /// Degree-`q` character induced from `a |-> zeta_k^r`, `b^q |-> zeta_l^s`.
    InducedMeta { r: u64, s: u64 },
    /// `chi(a) = (-1)^{e1}`, `chi(b) = (-1)^{e2} i^{e1 [n odd]}`.
    LinearQuat { e1: u64, e2: u64 },
    /// Degree-2 character with `chi_j(a^i) = zeta_{2n}^{ij} + zeta_{2n}^{-ij}`.
    Quat2Dim { j: u64 },
}

impl std::fmt::Display for CharLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            CharLabel::LinearMeta { s, t } => write!(f, "lin[s={s},t={t}]"),
            CharLabel::InducedMeta { r, s } => write!(f, "ind[r={r},s={s}]"),
            CharLabel::LinearQuat { e1, e2 } => write!(f, "lin[e1={e1},e2={e2}]"),
            CharLabel::Quat2Dim { j } => write!(f, "dim2[j={j}]"),
        }
    }
}

/// An irreducible character, with one exact value per conjugacy class.
#[derive(Clone, Debug)]
pub struct Character {
    pub label: CharLabel,
    pub degree: u64,
    values: Vec<RootSum>,
}

impl Character {
    pub fn values(&self) -> &[RootSum] {
        &self.values
    }

    pub fn value_at_class(&self, class: usize) -> &RootSum {
        &self.values[class]
    }
}

/// The full irreducible character table, in a deterministic label order.
pub fn irreducible_characters(group: &Group) -> Result<Vec<Character>, CharError> {
    let chars = match group.spec() {
        GroupSpec::Metacyclic { .. } => metacyclic_table(group),
        GroupSpec::Quaternion { .. } => quaternion_table(group),
    };
    validate_table(group, &chars)?;
    Ok(chars)
}

fn metacyclic_table(group: &Group) -> Vec<Character> {
    let gc = group.constants().expect("metacyclic constants");
    let (k, q, l, c) = (gc.k, gc.q, gc.l, gc.c);
    let ql = q * l;
    let n_exp = group.exponent();
    let classes = group.classes();
    let mut chars = Vec::new();
    for s in 0..ql {
        for t in 0..c {
            let values = classes
                .iter()
                .map(|cl| {
                    let rep = group.element_at(cl.rep);
                    let e = (mod_mul(mod_mul(n_exp / c, t, n_exp), rep.i, n_exp)
                        + mod_mul(mod_mul(n_exp / ql, s, n_exp), rep.j, n_exp))
                        % n_exp;
                    RootSum::root(n_exp as u32, e)
                })
                .collect();
            chars.push(Character { label: CharLabel::LinearMeta { s, t }, degree: 1, values });
        }
    }
    for r in 1..k {
        if r % (k / c) == 0 {
            continue;
        }
        let canonical = (0..q)
            .map(|u| mod_mul(r, mod_pow(gc.n, u, k), k))
            .min()
            .expect("orbit minimum");
        if canonical != r {
            continue;
        }
        for s in 0..l {
            let values = classes
                .iter()
                .map(|cl| {
                    let rep = group.element_at(cl.rep);
                    if !rep.j.is_multiple_of(q) {
                        return RootSum::zero(n_exp as u32);
                    }
                    let base = mod_mul(n_exp / l, mod_mul(s, rep.j / q, l), n_exp);
                    let exps = (0..q)
                        .map(|u| {
                            let rot = mod_mul(mod_mul(r, rep.i, k), mod_pow(gc.n, u, k), k);
                            (mod_mul(n_exp / k, rot, n_exp) + base) % n_exp
                        })
                        .collect();
                    RootSum::from_exponents(n_exp as u32, exps)
                })
                .collect();
            chars.push(Character { label: CharLabel::InducedMeta { r, s }, degree: q, values });
        }
    }
    chars
}

fn quaternion_table(group: &Group) -> Vec<Character> {
    let GroupSpec::Quaternion { n } = group.spec() else {
        unreachable!("quaternion table needs a quaternion spec");
    };
    let n_exp = group.exponent();
    let classes = group.classes();
    let mut chars = Vec::new();
    for e1 in 0..2u64 {
        for e2 in 0..2u64 {
            let values = classes
                .iter()
                .map(|cl| {
                    let rep = group.element_at(cl.rep);
                    let mut e = mod_mul(n_exp / 2, e1 * rep.i % 2, n_exp);
                    if rep.j == 1 {
                        e = mod_mul(n_exp / 2, (e1 * rep.i + e2) % 2, n_exp);
                        if n % 2 == 1 {
                            e = (e + n_exp / 4 * e1) % n_exp;
                        }
                    }
                    RootSum::root(n_exp as u32, e)
                })
                .collect();
            chars.push(Character { label: CharLabel::LinearQuat { e1, e2 }, degree: 1, values });
        }
    }
    for j in 1..n {
        let values = classes
            .iter()
            .map(|cl| {
                let rep = group.element_at(cl.rep);
                if rep.j == 1 {
                    return RootSum::zero(n_exp as u32);
                }
                let step = n_exp / (2 * n);
                let up = mod_mul(rep.i, j, 2 * n);
                RootSum::from_exponents(
                    n_exp as u32,
                    vec![step * up % n_exp, step * ((2 * n - up) % (2 * n)) % n_exp],
                )
            })
            .collect();
        chars.push(Character { label: CharLabel::Quat2Dim { j }, degree: 2, values });
    }
    chars
}

fn validate_table(group: &Group, chars: &[Character]) -> Result<(), CharError> {
    let classes = group.classes();
    if chars.len() != classes.len() {
        return Err(CharError::TableInvalid(format!(
            "{} characters for {} classes in {}",
            chars.len(),
            classes.len(),
            group.spec()
        )));
    }
    let degree_sum: u64 = chars.iter().map(|c| c.degree * c.degree).sum();
    if degree_sum != group.order() as u64 {
        return Err(CharError::TableInvalid(format!(
            "degree squares sum to {degree_sum} in {}",
            group.spec()
        )));
    }
    let id_class = group.class_index_of(0) as usize;
    for chi in chars {
        let at_id = chi.values[id_class]
            .as_integer()
            .map_err(|_| CharError::TableInvalid(format!("non-integer degree for {}", chi.label)))?;
        if at_id != BigInt::from(chi.degree) {
            return Err(CharError::TableInvalid(format!(
                "identity value disagrees with degree for {}",
                chi.label
            )));
        }
        if inner_product(group, chi, chi)? != 1 {
            return Err(CharError::TableInvalid(format!(
                "character {} has norm != 1 in {}",
                chi.label,
                group.spec()
            )));
        }
    }
    if group.order() <= 64 {
        for (x, chi) in chars.iter().enumerate() {
            for psi in chars.iter().skip(x + 1) {
                if inner_product(group, chi, psi)? != 0 {
                    return Err(CharError::TableInvalid(format!(
                        "characters {} and {} are not orthogonal in {}",
                        chi.label,
                        psi.label,
                        group.spec()
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Exact inner product `(1/|G|) sum_g chi(g) conj(psi(g))`, which must be a
/// non-negative integer for genuine characters.
pub fn inner_product(group: &Group, chi: &Character, psi: &Character) -> Result<i64, CharError> {
    let n = group.exponent();
    let mut counts = vec![0i64; n as usize];
    for (idx, cl) in group.classes().iter().enumerate() {
        let size = cl.size() as i64;
        for &e1 in chi.values[idx].exponents() {
            for &e2 in psi.values[idx].exponents() {
                counts[((e1 + n - e2) % n) as usize] += size;
            }
        }
    }
    let coords = cyc_table(n as u32).reduce_counts(&counts);
    if coords[1..].iter().any(|&c| c != 0) {
        return Err(CharError::TableInvalid(format!(
            "inner product of {} and {} is irrational",
            chi.label, psi.label
        )));
    }
    let order = group.order() as i64;
    if coords[0] % order != 0 {
        return Err(CharError::TableInvalid(format!(
            "inner product of {} and {} is not integral",
            chi.label, psi.label
        )));
    }
    Ok(coords[0] / order)
}

/// Class values of the induction of a linear subgroup character, computed
/// from the definition by summing over conjugators.
pub fn induced_class_values(
    group: &Group,
    phi: &LinearCharacter,
) -> Result<Vec<RootSum>, CharError> {
    let n = group.exponent();
    let h = phi.domain().len() as i64;
    let mut values = Vec::with_capacity(group.classes().len());
    for cl in group.classes() {
        let mut counts = vec![0i64; n as usize];
        for y in 0..group.order() as u32 {
            if let Some(e) = phi.exponent_at(group.conjugate(cl.rep, y)) {
                counts[e as usize] += 1;
            }
        }
        let mut exps = Vec::new();
        for (e, &ct) in counts.iter().enumerate() {
            if ct == 0 {
                continue;
            }
            if ct % h != 0 {
                return Err(CharError::TableInvalid(
                    "conjugator count is not a multiple of the subgroup order".into(),
                ));
            }
            exps.extend(std::iter::repeat_n(e as u64, (ct / h) as usize));
        }
        values.push(RootSum::from_exponents(n as u32, exps));
    }
    Ok(values)
}
