//! Labels for the simple modules of the Drinfel'd double: a conjugacy class
//! paired with an irreducible character of the class representative's
//! centralizer, with formula parameters extracted up front.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use super::IndicatorError;
use crate::characters::{
    abelian_dual, irreducible_characters, restrict_to_center, CharLabel, Character,
    LinearCharacter,
};
use crate::groups::{Group, GroupElement, GroupSpec};

/// Which case family a simple module belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LabelKind {
    /// Central class; the centralizer is the whole group.
    Central,
    /// Metacyclic class of `a^i b^j` with `q | j`, not central.
    TypeI,
    /// Metacyclic class of `a^i b^u` with `q` not dividing `u`.
    TypeII,
    /// Quaternion rotation class of `a^i`, `i` not in `{0, n}`.
    QuatRotation,
    /// Quaternion reflection class of `a^i b`.
    QuatReflection,
}

/// The centralizer character attached to a label.
#[derive(Clone, Debug)]
pub enum CentralizerChar {
    /// Centralizer equals the whole group: a full irreducible character.
    Group(Character),
    /// Abelian centralizer: a linear character.
    Linear(LinearCharacter),
}

/// Formula parameters read off the label at enumeration time.
#[derive(Clone, Copy, Debug)]
pub enum LabelParams {
    Central { label: CharLabel },
    TypeI { i: u64, j: u64, r: u64, s: u64 },
    TypeII { i: u64, j: u64, r: u64, s: u64 },
    QuatRotation { i: u64, j: u64 },
    QuatReflection { gen_exp: u64, chi_a_n: i64 },
}

/// One simple module of the double, `M(class, eta)`.
#[derive(Clone, Debug)]
pub struct DoubleModuleLabel {
    pub class_index: usize,
    pub kind: LabelKind,
    pub eta: CentralizerChar,
    pub params: LabelParams,
    /// Module dimension, `|class| * deg(eta)`.
    pub dim: u64,
    /// Stable display id, unique within a group.
    pub id: String,
}

impl std::fmt::Display for DoubleModuleLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.id)
    }
}

/// All simple modules of `D(G)`, grouped by conjugacy class in class order.
pub fn enumerate_double_irreducibles(
    group: &Group,
) -> Result<Vec<DoubleModuleLabel>, IndicatorError> {
    let mut labels = Vec::new();
    let irr = irreducible_characters(group)?;
    let n_exp = group.exponent();
    let mut dual_cache: HashMap<Vec<u32>, Vec<LinearCharacter>> = HashMap::new();
    for (ci, cl) in group.classes().iter().enumerate() {
        let rep = group.element_at(cl.rep);
        let orbit = cl.elements.len() as u64;
        if group.is_central(cl.rep) {
            for chi in &irr {
                labels.push(DoubleModuleLabel {
                    class_index: ci,
                    kind: LabelKind::Central,
                    eta: CentralizerChar::Group(chi.clone()),
                    params: LabelParams::Central { label: chi.label },
                    dim: chi.degree,
                    id: format!("cl({rep})*{}", chi.label),
                });
            }
            continue;
        }
        let cz = group.centralizer(cl.rep);
        let duals = match dual_cache.entry(cz) {
            Entry::Occupied(hit) => hit.get().clone(),
            Entry::Vacant(slot) => {
                let fresh = abelian_dual(group, slot.key())?;
                slot.insert(fresh).clone()
            }
        };
        match group.spec() {
            GroupSpec::Metacyclic { k, q, l, .. } => {
                if rep.j.is_multiple_of(q) {
                    let a_gen = group.index_of(GroupElement::new(1, 0));
                    let bq_gen = group.index_of(GroupElement::new(0, q));
                    for eta in duals {
                        let ea = eta.exponent_at(a_gen).expect("a centralizes the class");
                        let eb = eta.exponent_at(bq_gen).expect("b^q centralizes the class");
                        assert_eq!(ea % (n_exp / k), 0, "eta(a) is a k-th root");
                        assert_eq!(eb % (n_exp / l), 0, "eta(b^q) is an l-th root");
                        let (r, s) = (ea / (n_exp / k), eb / (n_exp / l));
                        labels.push(DoubleModuleLabel {
                            class_index: ci,
                            kind: LabelKind::TypeI,
                            params: LabelParams::TypeI { i: rep.i, j: rep.j, r, s },
                            dim: orbit,
                            id: format!("cl({rep})*eta[r={r},s={s}]"),
                            eta: CentralizerChar::Linear(eta),
                        });
                    }
                } else {
                    let x_order = group.element_order(cl.rep);
                    for eta in duals {
                        let res = restrict_to_center(group, &eta)?;
                        let ex = eta.exponent_at(cl.rep).expect("the rep centralizes itself");
                        assert_eq!(ex % (n_exp / x_order), 0, "eta(x) has the order of x");
                        let e = ex / (n_exp / x_order);
                        labels.push(DoubleModuleLabel {
                            class_index: ci,
                            kind: LabelKind::TypeII,
                            params: LabelParams::TypeII { i: rep.i, j: rep.j, r: res.r, s: res.s },
                            dim: orbit,
                            id: format!("cl({rep})*eta[r={},s={},x={e}]", res.r, res.s),
                            eta: CentralizerChar::Linear(eta),
                        });
                    }
                }
            }
            GroupSpec::Quaternion { n } => {
                if rep.j == 0 {
                    let a_gen = group.index_of(GroupElement::new(1, 0));
                    for eta in duals {
                        let ea = eta.exponent_at(a_gen).expect("a centralizes a rotation");
                        assert_eq!(ea % (n_exp / (2 * n)), 0, "eta(a) is a 2n-th root");
                        let j = ea / (n_exp / (2 * n));
                        labels.push(DoubleModuleLabel {
                            class_index: ci,
                            kind: LabelKind::QuatRotation,
                            params: LabelParams::QuatRotation { i: rep.i, j },
                            dim: orbit,
                            id: format!("cl({rep})*eta[j={j}]"),
                            eta: CentralizerChar::Linear(eta),
                        });
                    }
                } else {
                    let an_idx = group.index_of(GroupElement::new(n, 0));
                    for eta in duals {
                        let ex = eta.exponent_at(cl.rep).expect("the rep centralizes itself");
                        assert_eq!(ex % (n_exp / 4), 0, "eta(a^i b) is a fourth root");
                        let gen_exp = ex / (n_exp / 4);
                        let ean = eta.exponent_at(an_idx).expect("a^n is central");
                        let chi_a_n = if ean == 0 {
                            1
                        } else {
                            assert_eq!(ean, n_exp / 2, "eta(a^n) is a sign");
                            -1
                        };
                        labels.push(DoubleModuleLabel {
                            class_index: ci,
                            kind: LabelKind::QuatReflection,
                            params: LabelParams::QuatReflection { gen_exp, chi_a_n },
                            dim: orbit,
                            id: format!("cl({rep})*eta[x={gen_exp}]"),
                            eta: CentralizerChar::Linear(eta),
                        });
                    }
                }
            }
        }
    }
    validate_labels(group, &labels);
    Ok(labels)
}

fn validate_labels(group: &Group, labels: &[DoubleModuleLabel]) {
    let order = group.order() as u64;
    let dim_sq: u64 = labels.iter().map(|lab| lab.dim * lab.dim).sum();
    assert_eq!(dim_sq, order * order, "simple dimensions square-sum to |G|^2");
    let mut ids: Vec<&str> = labels.iter().map(|lab| lab.id.as_str()).collect();
    ids.sort_unstable();
    ids.dedup();
    assert_eq!(ids.len(), labels.len(), "label ids are distinct");
}
