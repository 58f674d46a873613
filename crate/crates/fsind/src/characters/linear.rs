//! Linear characters of abelian subgroups, constructed by extending a
//! partial character one generator at a time.

use std::sync::Arc;

use super::root_sum::RootSum;
use super::CharError;
use crate::groups::{Group, GroupElement};

/// A linear character of a subgroup, with values `zeta_N^e` recorded as
/// exponents against the conductor `N` of the ambient group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCharacter {
    domain: Arc<Vec<u32>>,
    exponents: Vec<u64>,
    conductor: u32,
}

impl LinearCharacter {
    pub fn new(domain: Arc<Vec<u32>>, exponents: Vec<u64>, conductor: u32) -> LinearCharacter {
        assert_eq!(domain.len(), exponents.len());
        LinearCharacter { domain, exponents, conductor }
    }

    pub fn domain(&self) -> &Arc<Vec<u32>> {
        &self.domain
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// The exponent `e` with value `zeta_N^e` at `g`, if `g` lies in the
    /// domain subgroup.
    pub fn exponent_at(&self, g: u32) -> Option<u64> {
        self.domain
            .binary_search(&g)
            .ok()
            .map(|pos| self.exponents[pos])
    }

    pub fn value(&self, g: u32) -> Option<RootSum> {
        self.exponent_at(g).map(|e| RootSum::root(self.conductor, e))
    }
}

/// All linear characters of an abelian subgroup, in a deterministic order.
/// The subgroup is given as a sorted list of element indices.
pub fn abelian_dual(group: &Group, subgroup: &[u32]) -> Result<Vec<LinearCharacter>, CharError> {
    let h = subgroup.len();
    let describe = || {
        format!(
            "subgroup of order {h} in {} generated at {}",
            group.spec(),
            group.element_at(subgroup[0])
        )
    };
    if h == 0 || subgroup[0] != 0 {
        return Err(CharError::NotAbelian(
            "subgroup list must be sorted and contain the identity".into(),
        ));
    }
    let mut pos_of = vec![u32::MAX; group.order()];
    for (t, &g) in subgroup.iter().enumerate() {
        pos_of[g as usize] = t as u32;
    }
    for &x in subgroup {
        if pos_of[group.inv_idx(x) as usize] == u32::MAX {
            return Err(CharError::NotAbelian(format!(
                "element set is not closed under inversion: {}",
                describe()
            )));
        }
        for &y in subgroup {
            if pos_of[group.mul_idx(x, y) as usize] == u32::MAX {
                return Err(CharError::NotAbelian(format!(
                    "element set is not closed under multiplication: {}",
                    describe()
                )));
            }
            if group.mul_idx(x, y) != group.mul_idx(y, x) {
                return Err(CharError::NotAbelian(describe()));
            }
        }
    }

    let n = group.exponent();
    let mut covered = vec![false; h];
    covered[0] = true;
    let mut covered_list = vec![0usize];
    let mut chars: Vec<Vec<u64>> = vec![vec![0; h]];
    let mut generators: Vec<usize> = Vec::new();

    while covered_list.len() < h {
        let g_pos = covered.iter().position(|&c| !c).expect("uncovered element");
        let g = subgroup[g_pos];
        generators.push(g_pos);
        let mut rel_order = 1u64;
        let mut anchor = g;
        while !covered[pos_of[anchor as usize] as usize] {
            anchor = group.mul_idx(anchor, g);
            rel_order += 1;
        }
        if !n.is_multiple_of(rel_order) {
            return Err(CharError::TableInvalid(format!(
                "relative order {rel_order} does not divide the exponent {n}: {}",
                describe()
            )));
        }
        let step = n / rel_order;
        let mut next_chars = Vec::with_capacity(chars.len() * rel_order as usize);
        for phi in &chars {
            let at_anchor = phi[pos_of[anchor as usize] as usize];
            if at_anchor % rel_order != 0 {
                return Err(CharError::TableInvalid(format!(
                    "character does not extend along a generator: {}",
                    describe()
                )));
            }
            let x0 = at_anchor / rel_order;
            for t in 0..rel_order {
                let x = (x0 + t * step) % n;
                let mut ext = phi.clone();
                for &cp in &covered_list {
                    let mut power = g;
                    for j in 1..rel_order {
                        let target = pos_of[group.mul_idx(subgroup[cp], power) as usize];
                        ext[target as usize] = (phi[cp] + j * x) % n;
                        power = group.mul_idx(power, g);
                    }
                }
                next_chars.push(ext);
            }
        }
        chars = next_chars;
        let previously_covered = covered_list.clone();
        for cp in previously_covered {
            let mut power = g;
            for _ in 1..=rel_order - 1 {
                let target = pos_of[group.mul_idx(subgroup[cp], power) as usize] as usize;
                if !covered[target] {
                    covered[target] = true;
                    covered_list.push(target);
                }
                power = group.mul_idx(power, g);
            }
        }
    }

    if chars.len() != h {
        return Err(CharError::TableInvalid(format!(
            "expected {h} linear characters, found {}: {}",
            chars.len(),
            describe()
        )));
    }
    let mut sorted = chars.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != h {
        return Err(CharError::TableInvalid(format!(
            "linear characters are not distinct: {}",
            describe()
        )));
    }
    // Multiplicativity against every generator extends to all pairs by
    // induction on the generator word length of the second factor.
    for phi in &chars {
        for &g_pos in &generators {
            let g = subgroup[g_pos];
            let at_g = phi[g_pos];
            for s in 0..h {
                let prod = pos_of[group.mul_idx(subgroup[s], g) as usize] as usize;
                if (phi[s] + at_g) % n != phi[prod] {
                    return Err(CharError::TableInvalid(format!(
                        "linear character is not multiplicative: {}",
                        describe()
                    )));
                }
            }
        }
    }

    let domain = Arc::new(subgroup.to_vec());
    Ok(chars
        .into_iter()
        .map(|exponents| LinearCharacter::new(domain.clone(), exponents, n as u32))
        .collect())
}

/// The restriction data of a centralizer character to the center of a
/// metacyclic group: `eta(a^{k/c}) = zeta_c^r` and `eta(b^q) = zeta_l^s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CentralRestriction {
    pub r: u64,
    pub s: u64,
}

pub fn restrict_to_center(
    group: &Group,
    eta: &LinearCharacter,
) -> Result<CentralRestriction, CharError> {
    let gc = group.constants().ok_or_else(|| {
        CharError::Unsupported("central restriction labels need a metacyclic group".into())
    })?;
    let n = group.exponent();
    let a_gen = group.index_of(GroupElement::new(gc.k / gc.c, 0));
    let b_gen = group.index_of(GroupElement::new(0, gc.q));
    let missing = || {
        CharError::Unsupported(format!(
            "character domain does not contain the center of {}",
            group.spec()
        ))
    };
    let ea = eta.exponent_at(a_gen).ok_or_else(missing)?;
    let eb = eta.exponent_at(b_gen).ok_or_else(missing)?;
    assert_eq!(ea % (n / gc.c), 0, "value at the central a-part is a c-th root");
    assert_eq!(eb % (n / gc.l), 0, "value at the central b-part is an l-th root");
    Ok(CentralRestriction { r: ea / (n / gc.c), s: eb / (n / gc.l) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::GroupSpec;

    #[test]
    fn dual_of_cyclic_subgroup() {
        let group = Group::new(GroupSpec::metacyclic(8, 2, 3, 1)).unwrap();
        let a = group.index_of(GroupElement::new(1, 0));
        let sub = group.subgroup_closure(&[a]);
        let dual = abelian_dual(&group, &sub).unwrap();
        assert_eq!(dual.len(), 8);
        let mut images: Vec<u64> = dual
            .iter()
            .map(|phi| phi.exponent_at(a).unwrap() / (group.exponent() / 8))
            .collect();
        images.sort_unstable();
        assert_eq!(images, (0..8).collect::<Vec<u64>>());
    }

    #[test]
    fn dual_of_two_generator_subgroup() {
        let group = Group::new(GroupSpec::metacyclic(8, 2, 3, 2)).unwrap();
        let a = group.index_of(GroupElement::new(1, 0));
        let b2 = group.index_of(GroupElement::new(0, 2));
        let sub = group.subgroup_closure(&[a, b2]);
        assert_eq!(sub.len(), 16);
        let dual = abelian_dual(&group, &sub).unwrap();
        assert_eq!(dual.len(), 16);
    }

    #[test]
    fn quaternion_reflection_centralizer_dual() {
        let group = Group::new(GroupSpec::quaternion(3)).unwrap();
        let x = group.index_of(GroupElement::new(1, 1));
        let sub = group.subgroup_closure(&[x]);
        assert_eq!(sub.len(), 4);
        let dual = abelian_dual(&group, &sub).unwrap();
        let central = group.index_of(GroupElement::new(3, 0));
        for phi in &dual {
            let e = phi.exponent_at(central).unwrap();
            assert!(e == 0 || e == group.exponent() / 2);
        }
    }

    #[test]
    fn nonabelian_subgroup_rejected() {
        let group = Group::new(GroupSpec::metacyclic(8, 2, 3, 1)).unwrap();
        let all: Vec<u32> = (0..group.order() as u32).collect();
        assert!(matches!(
            abelian_dual(&group, &all),
            Err(CharError::NotAbelian(_))
        ));
    }

    #[test]
    fn central_restriction_labels() {
        let group = Group::new(GroupSpec::metacyclic(12, 2, 7, 1)).unwrap();
        let a = group.index_of(GroupElement::new(1, 0));
        let b2 = group.index_of(GroupElement::new(0, 2));
        let sub = group.subgroup_closure(&[a, b2]);
        let n = group.exponent();
        for eta in abelian_dual(&group, &sub).unwrap() {
            let r_full = eta.exponent_at(a).unwrap() / (n / 12);
            let rest = restrict_to_center(&group, &eta).unwrap();
            assert_eq!(rest.r, r_full % 6, "restriction follows a^2");
            assert_eq!(rest.s, 0);
        }
    }
}
