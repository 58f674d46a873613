//! Indicators for simple modules of the Drinfel'd double `D(G)`: label
//! enumeration, exact brute-force oracles, closed-form case tables, and the
//! negativity criterion.

mod brute;
mod formula;
mod labels;
mod negativity;
mod trace;

pub use brute::{double_brute_table, double_indicator_rows, nu_double_brute, IndicatorRow};
pub use formula::nu_double_formula;
pub use labels::{
    enumerate_double_irreducibles, CentralizerChar, DoubleModuleLabel, LabelKind, LabelParams,
};
pub use negativity::{find_negative_witness, negative_exists};
pub use trace::{double_trace, double_trace_direct};

pub use crate::group_indicators::IndicatorError;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::GroupConstants;
    use crate::groups::{Group, GroupSpec};

    fn group(spec: GroupSpec) -> Group {
        Group::new(spec).unwrap()
    }

    #[test]
    fn label_census_small_fixtures() {
        let g = group(GroupSpec::metacyclic(8, 2, 3, 1));
        let labels = enumerate_double_irreducibles(&g).unwrap();
        let count = |kind| labels.iter().filter(|l| l.kind == kind).count();
        assert_eq!(count(LabelKind::Central), 2 * 7);
        assert_eq!(count(LabelKind::TypeI), 3 * 8);
        assert_eq!(count(LabelKind::TypeII), 2 * 4);

        let q8 = group(GroupSpec::quaternion(2));
        let labels = enumerate_double_irreducibles(&q8).unwrap();
        assert_eq!(labels.len(), 22);
        let count = |kind| labels.iter().filter(|l| l.kind == kind).count();
        assert_eq!(count(LabelKind::Central), 10);
        assert_eq!(count(LabelKind::QuatRotation), 4);
        assert_eq!(count(LabelKind::QuatReflection), 8);
    }

    #[test]
    fn formula_matches_brute_on_fixtures() {
        for spec in [
            GroupSpec::metacyclic(8, 2, 3, 1),
            GroupSpec::metacyclic(8, 2, 3, 2),
            GroupSpec::metacyclic(9, 3, 4, 1),
            GroupSpec::metacyclic(12, 2, 5, 2),
            GroupSpec::metacyclic(7, 3, 2, 1),
            GroupSpec::quaternion(2),
            GroupSpec::quaternion(3),
        ] {
            let g = group(spec);
            let rows = double_indicator_rows(&g, 2 * g.exponent()).unwrap();
            for row in &rows {
                assert!(
                    row.agree,
                    "{spec}: {} at m={} has formula {:?} but brute {}",
                    row.label, row.m, row.nu_formula, row.nu_brute
                );
            }
        }
    }

    #[test]
    fn batched_table_matches_single_shot() {
        let g = group(GroupSpec::metacyclic(6, 2, 5, 1));
        let labels = enumerate_double_irreducibles(&g).unwrap();
        let table = double_brute_table(&g, &labels, 13).unwrap();
        for (li, label) in labels.iter().enumerate() {
            for m in 1..=13 {
                assert_eq!(
                    table[li][(m - 1) as usize],
                    nu_double_brute(&g, label, m).unwrap(),
                    "label {} at m={m}",
                    label.id
                );
            }
        }
    }

    #[test]
    fn negative_witness_at_k24() {
        let spec = GroupSpec::metacyclic(24, 2, 19, 1);
        assert!(negative_exists(&spec).unwrap());
        let g = group(spec);
        let labels = enumerate_double_irreducibles(&g).unwrap();
        let targets: Vec<_> = labels
            .iter()
            .filter(|l| {
                matches!(
                    l.params,
                    LabelParams::TypeII { i: 1, r: 1, s: 0, .. }
                )
            })
            .collect();
        assert!(!targets.is_empty());
        for label in targets {
            assert_eq!(nu_double_formula(&g, label, 6).unwrap(), -1);
            assert_eq!(nu_double_brute(&g, label, 6).unwrap(), -1);
            assert_eq!(nu_double_formula(&g, label, 2).unwrap(), 0);
            assert_eq!(nu_double_brute(&g, label, 2).unwrap(), 0);
        }
        let witness = find_negative_witness(&g, 2 * g.exponent()).unwrap();
        assert!(witness.is_some());
    }

    #[test]
    fn semidihedral_negative_at_m2() {
        let g = group(GroupSpec::metacyclic(8, 2, 3, 1));
        let labels = enumerate_double_irreducibles(&g).unwrap();
        let mut found = false;
        for label in &labels {
            if let LabelParams::TypeII { i: 1, r: 1, .. } = label.params {
                assert_eq!(nu_double_formula(&g, label, 2).unwrap(), -1);
                assert_eq!(nu_double_brute(&g, label, 2).unwrap(), -1);
                found = true;
            }
        }
        assert!(found, "semidihedral type II label with i=1, r=1 exists");
    }

    #[test]
    fn semidihedral_type2_closed_table() {
        let k = 8u64;
        let g = group(GroupSpec::metacyclic(k, 2, 3, 1));
        let labels = enumerate_double_irreducibles(&g).unwrap();
        for label in &labels {
            let LabelParams::TypeII { i, r, .. } = label.params else {
                continue;
            };
            for m in 1..=16u64 {
                let expected = if m % 2 != 0 {
                    0
                } else if m % 4 == 0 || r == 0 || i % 2 == 0 {
                    (crate::exact_arith::gcd(m, k) / 2) as i64
                } else {
                    -1
                };
                assert_eq!(
                    nu_double_formula(&g, label, m).unwrap(),
                    expected,
                    "label {} at m={m}",
                    label.id
                );
            }
        }
    }

    #[test]
    fn degenerate_type2_path_matches_general() {
        for spec in [
            GroupSpec::metacyclic(7, 3, 2, 1),
            GroupSpec::metacyclic(6, 2, 5, 1),
            GroupSpec::metacyclic(13, 3, 3, 1),
        ] {
            let GroupSpec::Metacyclic { k, q, n, l } = spec else {
                unreachable!()
            };
            let gc = GroupConstants::new(k, q, n, l).unwrap();
            if gc.d_mod_k() != 0 {
                continue;
            }
            let g = group(spec);
            for label in enumerate_double_irreducibles(&g).unwrap() {
                let LabelParams::TypeII { i, r, s, .. } = label.params else {
                    continue;
                };
                for t in 1..=(2 * g.exponent() / q) {
                    let m = q * t;
                    let fast = super::formula::type2_value_d0(&gc, &label.id, m).unwrap();
                    let general =
                        super::formula::type2_value_general(&gc, &label.id, m, i, r, s)
                            .unwrap();
                    assert_eq!(fast, general, "m={m} for {}", label.id);
                }
            }
        }
    }

    #[test]
    fn pq_double_tables() {
        let g = group(GroupSpec::metacyclic(7, 3, 2, 1));
        let rows = double_indicator_rows(&g, 21).unwrap();
        for row in &rows {
            assert!(row.agree);
        }
        for label in enumerate_double_irreducibles(&g).unwrap() {
            if let LabelParams::TypeII { .. } = label.params {
                assert_eq!(nu_double_formula(&g, &label, 3).unwrap(), 3);
                assert_eq!(nu_double_formula(&g, &label, 21).unwrap(), 7);
                assert_eq!(nu_double_formula(&g, &label, 2).unwrap(), 0);
            }
        }
    }

    #[test]
    fn dihedral_type2_value() {
        let g = group(GroupSpec::metacyclic(6, 2, 5, 1));
        for label in enumerate_double_irreducibles(&g).unwrap() {
            if let LabelParams::TypeII { .. } = label.params {
                assert_eq!(nu_double_formula(&g, &label, 2).unwrap(), 1);
                assert_eq!(nu_double_brute(&g, &label, 2).unwrap(), 1);
            }
        }
    }

    #[test]
    fn quaternion_reflection_rows() {
        let q8 = group(GroupSpec::quaternion(2));
        for label in enumerate_double_irreducibles(&q8).unwrap() {
            if let LabelParams::QuatReflection { chi_a_n, .. } = label.params {
                assert_eq!(nu_double_formula(&q8, &label, 2).unwrap(), chi_a_n);
                assert_eq!(nu_double_brute(&q8, &label, 2).unwrap(), chi_a_n);
                assert_eq!(nu_double_formula(&q8, &label, 4).unwrap(), 2);
            }
        }

        let q12 = group(GroupSpec::quaternion(3));
        for label in enumerate_double_irreducibles(&q12).unwrap() {
            if let LabelParams::QuatReflection { .. } = label.params {
                assert_eq!(nu_double_formula(&q12, &label, 2).unwrap(), 0);
                assert_eq!(nu_double_brute(&q12, &label, 2).unwrap(), 0);
                assert_eq!(nu_double_formula(&q12, &label, 4).unwrap(), 1);
                assert_eq!(nu_double_formula(&q12, &label, 12).unwrap(), 3);
            }
        }
    }

    #[test]
    fn negativity_closed_form() {
        assert!(negative_exists(&GroupSpec::metacyclic(24, 2, 19, 1)).unwrap());
        assert!(negative_exists(&GroupSpec::metacyclic(8, 2, 3, 1)).unwrap());
        assert!(!negative_exists(&GroupSpec::metacyclic(12, 2, 5, 1)).unwrap());
        assert!(!negative_exists(&GroupSpec::metacyclic(6, 2, 5, 1)).unwrap());
        assert!(!negative_exists(&GroupSpec::metacyclic(7, 3, 2, 1)).unwrap());
        assert!(negative_exists(&GroupSpec::quaternion(3)).unwrap());
        assert!(matches!(
            negative_exists(&GroupSpec::metacyclic(12, 2, 5, 2)),
            Err(IndicatorError::Group(_))
        ));

        let dihedral = group(GroupSpec::metacyclic(6, 2, 5, 1));
        assert!(find_negative_witness(&dihedral, 2 * dihedral.exponent())
            .unwrap()
            .is_none());
    }
}
