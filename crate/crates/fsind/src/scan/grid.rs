//! Deterministic enumeration of every valid group spec within the
//! configured parameter bounds.

use crate::exact_arith::{is_prime, mod_pow};
use crate::groups::{GroupError, GroupSpec};

/// Bounds describing a family of specs to sweep.
#[derive(Clone, Debug)]
pub struct Grid {
    pub k_max: u64,
    pub q_set: Vec<u64>,
    pub l_max: u64,
    pub quat_max: u64,
}

impl Grid {
    /// Validate and normalize the bounds; `q_set` is sorted, deduplicated
    /// and must consist of primes.
    pub fn new(k_max: u64, q_set: &[u64], l_max: u64, quat_max: u64) -> Result<Grid, GroupError> {
        let mut qs = q_set.to_vec();
        qs.sort_unstable();
        qs.dedup();
        for &q in &qs {
            if !is_prime(q) {
                return Err(GroupError::InvalidSpec(format!(
                    "q = {q} in the q set must be prime"
                )));
            }
        }
        Ok(Grid { k_max, q_set: qs, l_max, quat_max })
    }

    /// Bound description echoed in report metadata.
    pub fn describe(&self) -> String {
        format!(
            "metacyclic k<={} q in {:?} l<={}; quaternion n<={}",
            self.k_max, self.q_set, self.l_max, self.quat_max
        )
    }

    /// Valid metacyclic `(k, q, n)` triples in lexicographic order.
    pub fn twists(&self) -> Vec<(u64, u64, u64)> {
        let mut out = Vec::new();
        for k in 2..=self.k_max {
            for &q in &self.q_set {
                for n in 2..k {
                    if mod_pow(n, q, k) == 1 {
                        out.push((k, q, n));
                    }
                }
            }
        }
        out
    }

    /// Valid metacyclic specs in `(k, q, n, l)` lexicographic order.
    pub fn metacyclic_specs(&self) -> Vec<GroupSpec> {
        let mut out = Vec::new();
        for (k, q, n) in self.twists() {
            for l in 1..=self.l_max {
                out.push(GroupSpec::metacyclic(k, q, n, l));
            }
        }
        out
    }

    /// Quaternion specs `Q_4n` for `n` up to the bound.
    pub fn quaternion_specs(&self) -> Vec<GroupSpec> {
        (2..=self.quat_max).map(GroupSpec::quaternion).collect()
    }

    /// Every spec in the grid, metacyclic first.
    pub fn all_specs(&self) -> Vec<GroupSpec> {
        let mut out = self.metacyclic_specs();
        out.extend(self.quaternion_specs());
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composite_q() {
        assert!(Grid::new(10, &[2, 4], 1, 2).is_err());
        assert!(Grid::new(10, &[2, 3], 1, 2).is_ok());
    }

    #[test]
    fn q_set_is_sorted_and_deduplicated() {
        let grid = Grid::new(10, &[5, 2, 5, 3], 1, 2).unwrap();
        assert_eq!(grid.q_set, vec![2, 3, 5]);
    }

    #[test]
    fn twists_are_exactly_the_valid_parameters() {
        let grid = Grid::new(12, &[2], 1, 0).unwrap();
        let twists = grid.twists();
        assert_eq!(
            twists,
            vec![
                (3, 2, 2),
                (4, 2, 3),
                (5, 2, 4),
                (6, 2, 5),
                (7, 2, 6),
                (8, 2, 3),
                (8, 2, 5),
                (8, 2, 7),
                (9, 2, 8),
                (10, 2, 9),
                (11, 2, 10),
                (12, 2, 5),
                (12, 2, 7),
                (12, 2, 11),
            ]
        );
        for &(k, q, n) in &twists {
            assert!(GroupSpec::metacyclic(k, q, n, 1).validate().is_ok());
        }
    }

    #[test]
    fn empty_bounds_give_empty_grids() {
        let grid = Grid::new(0, &[2], 4, 1).unwrap();
        assert!(grid.all_specs().is_empty());
        let grid = Grid::new(20, &[2], 0, 0).unwrap();
        assert!(grid.metacyclic_specs().is_empty());
    }

    #[test]
    fn specs_cover_l_and_quaternion_ranges() {
        let grid = Grid::new(4, &[2], 3, 4).unwrap();
        let specs = grid.all_specs();
        assert_eq!(
            specs,
            vec![
                GroupSpec::metacyclic(3, 2, 2, 1),
                GroupSpec::metacyclic(3, 2, 2, 2),
                GroupSpec::metacyclic(3, 2, 2, 3),
                GroupSpec::metacyclic(4, 2, 3, 1),
                GroupSpec::metacyclic(4, 2, 3, 2),
                GroupSpec::metacyclic(4, 2, 3, 3),
                GroupSpec::quaternion(2),
                GroupSpec::quaternion(3),
                GroupSpec::quaternion(4),
            ]
        );
    }
}
