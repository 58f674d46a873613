//! Brute-force indicator evaluation: exact cyclotomic averaging of character
//! values over power maps, with batching over the power `m`.

use std::collections::HashMap;

use super::IndicatorError;
use crate::characters::{irreducible_characters, Character};
use crate::exact_arith::cyc_table;
use crate::groups::{Group, GroupElement};

/// `nu_m(chi) = (1/|G|) sum_g chi(g^m)`, evaluated exactly.
pub fn nu_group_brute(group: &Group, chi: &Character, m: u64) -> Result<i64, IndicatorError> {
    let power_classes: Vec<u32> = group
        .classes()
        .iter()
        .map(|cl| group.class_index_of(group.pow_idx(cl.rep, m)))
        .collect();
    indicator_from_power_classes(group, chi, &power_classes, m)
}

/// Shared core: average `chi` over the class-level power map for one `m`.
fn indicator_from_power_classes(
    group: &Group,
    chi: &Character,
    power_classes: &[u32],
    m: u64,
) -> Result<i64, IndicatorError> {
    let conductor = group.exponent() as u32;
    let table = cyc_table(conductor);
    let mut counts = vec![0i64; conductor as usize];
    for (cl, &target) in group.classes().iter().zip(power_classes) {
        let size = cl.elements.len() as i64;
        for &e in chi.value_at_class(target as usize).exponents() {
            counts[e as usize] += size;
        }
    }
    let coords = table.reduce_counts(&counts);
    let order = group.order() as i64;
    if coords[1..].iter().any(|&c| c != 0) || coords[0] % order != 0 {
        return Err(IndicatorError::NotAnInteger(format!(
            "nu_{m}({}) over {}",
            chi.label,
            group.spec()
        )));
    }
    Ok(coords[0] / order)
}

/// Indicator table `result[m - 1][idx]` for every character in `chars` and
/// every `m` in `1..=m_max`, caching rows by the class-level power map.
pub fn group_indicator_table(
    group: &Group,
    chars: &[Character],
    m_max: u64,
) -> Result<Vec<Vec<i64>>, IndicatorError> {
    let exponent = group.exponent();
    let reps: Vec<u32> = group.classes().iter().map(|cl| cl.rep).collect();
    let mut power = reps.clone();
    let mut cache: HashMap<Vec<u32>, Vec<i64>> = HashMap::new();
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(m_max as usize);
    for m in 1..=m_max {
        if m > exponent {
            let earlier = rows[(m - exponent) as usize - 1].clone();
            rows.push(earlier);
            continue;
        }
        let key: Vec<u32> = power.iter().map(|&p| group.class_index_of(p)).collect();
        let row = match cache.get(&key) {
            Some(row) => row.clone(),
            None => {
                let mut row = Vec::with_capacity(chars.len());
                for chi in chars {
                    row.push(indicator_from_power_classes(group, chi, &key, m)?);
                }
                cache.insert(key, row.clone());
                row
            }
        };
        rows.push(row);
        for (p, &rep) in power.iter_mut().zip(&reps) {
            *p = group.mul_idx(*p, rep);
        }
    }
    Ok(rows)
}

/// Number of solutions of `g^m = e` in `G`.
pub fn frobenius_root_count(group: &Group, m: u64) -> u64 {
    let identity = group.index_of(GroupElement { i: 0, j: 0 });
    group
        .classes()
        .iter()
        .filter(|cl| group.pow_idx(cl.rep, m) == identity)
        .map(|cl| cl.elements.len() as u64)
        .sum()
}

/// Whether every irreducible character has `nu_2 = 1`.
pub fn total_orthogonality(group: &Group) -> Result<bool, IndicatorError> {
    let chars = irreducible_characters(group)?;
    for chi in &chars {
        if nu_group_brute(group, chi, 2)? != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_indicators::nu_group_formula;
    use crate::groups::GroupSpec;

    fn fixture_specs() -> Vec<GroupSpec> {
        vec![
            GroupSpec::metacyclic(8, 2, 3, 1),
            GroupSpec::metacyclic(9, 3, 4, 1),
            GroupSpec::metacyclic(12, 2, 5, 2),
            GroupSpec::metacyclic(6, 2, 5, 3),
            GroupSpec::metacyclic(7, 3, 2, 1),
            GroupSpec::quaternion(2),
            GroupSpec::quaternion(3),
            GroupSpec::quaternion(5),
        ]
    }

    #[test]
    fn brute_matches_formula_on_fixtures() {
        for spec in fixture_specs() {
            let group = Group::new(spec).unwrap();
            let chars = irreducible_characters(&group).unwrap();
            for m in 1..=2 * group.exponent() {
                for chi in &chars {
                    let brute = nu_group_brute(&group, chi, m).unwrap();
                    let formula = nu_group_formula(&spec, &chi.label, m).unwrap();
                    assert_eq!(brute, formula, "nu_{m}({}) on {spec}", chi.label);
                }
            }
        }
    }

    #[test]
    fn batched_table_matches_single_calls() {
        for spec in [GroupSpec::metacyclic(12, 2, 5, 2), GroupSpec::quaternion(4)] {
            let group = Group::new(spec).unwrap();
            let chars = irreducible_characters(&group).unwrap();
            let m_max = 2 * group.exponent() + 3;
            let table = group_indicator_table(&group, &chars, m_max).unwrap();
            for m in 1..=m_max {
                for (idx, chi) in chars.iter().enumerate() {
                    assert_eq!(
                        table[(m - 1) as usize][idx],
                        nu_group_brute(&group, chi, m).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn indicator_sum_counts_roots() {
        for spec in fixture_specs() {
            let group = Group::new(spec).unwrap();
            let chars = irreducible_characters(&group).unwrap();
            for m in 1..=2 * group.exponent() {
                let weighted: i64 = chars
                    .iter()
                    .map(|chi| {
                        nu_group_brute(&group, chi, m).unwrap() * chi.degree as i64
                    })
                    .sum();
                assert_eq!(weighted as u64, frobenius_root_count(&group, m));
            }
        }
    }

    #[test]
    fn indicator_values_stay_in_range() {
        for spec in fixture_specs() {
            let group = Group::new(spec).unwrap();
            let chars = irreducible_characters(&group).unwrap();
            for m in 1..=2 * group.exponent() {
                for chi in &chars {
                    let nu = nu_group_brute(&group, chi, m).unwrap();
                    if let GroupSpec::Metacyclic { q, l, .. } = spec {
                        let q = q as i64;
                        assert!([-1, 0, 1, q - 1, q].contains(&nu));
                        if l % (q as u64) != 0 {
                            assert!(nu >= 0, "negative nu_{m} with q not dividing l");
                        }
                    }
                    if m == 2 {
                        assert!((-1..=1).contains(&nu));
                    }
                }
            }
        }
    }

    #[test]
    fn orthogonality_detects_dihedral_and_rejects_others() {
        let dihedral = Group::new(GroupSpec::metacyclic(5, 2, 4, 1)).unwrap();
        assert!(total_orthogonality(&dihedral).unwrap());
        let semidihedral = Group::new(GroupSpec::metacyclic(8, 2, 3, 1)).unwrap();
        assert!(!total_orthogonality(&semidihedral).unwrap());
        let quaternion = Group::new(GroupSpec::quaternion(2)).unwrap();
        assert!(!total_orthogonality(&quaternion).unwrap());
    }

    #[test]
    fn seven_three_full_table() {
        let spec = GroupSpec::metacyclic(7, 3, 2, 1);
        let group = Group::new(spec).unwrap();
        let chars = irreducible_characters(&group).unwrap();
        for chi in &chars {
            for (m, induced) in [(1, 0), (2, 0), (3, 2), (7, 1), (21, 3)] {
                let nu = nu_group_brute(&group, chi, m).unwrap();
                match chi.label {
                    crate::characters::CharLabel::LinearMeta { s, .. } => {
                        assert_eq!(nu, i64::from((m * s) % 3 == 0));
                    }
                    _ => assert_eq!(nu, induced),
                }
            }
        }
    }
}
