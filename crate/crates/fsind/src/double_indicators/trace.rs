//! Exact traces of `p_g . y` acting on a simple module of the double,
//! computed two ways: a closed form and a literal walk over the module's
//! transversal blocks.

use super::labels::{CentralizerChar, DoubleModuleLabel};
use crate::characters::RootSum;
use crate::groups::Group;

impl DoubleModuleLabel {
    /// `eta(y)` for `y` in the centralizer of the class representative.
    pub fn eta_value(&self, group: &Group, y: u32) -> RootSum {
        match &self.eta {
            CentralizerChar::Group(chi) => {
                chi.value_at_class(group.class_index_of(y) as usize).clone()
            }
            CentralizerChar::Linear(eta) => {
                eta.value(y).expect("argument lies in the centralizer")
            }
        }
    }
}

/// Trace of `p_g . y` on `M(class, eta)`, closed form: only the block graded
/// by `g` can contribute, and it does iff `y` centralizes `g`.
pub fn double_trace(group: &Group, label: &DoubleModuleLabel, g: u32, y: u32) -> RootSum {
    let conductor = group.exponent() as u32;
    let cl = &group.classes()[label.class_index];
    let Some(pos) = cl.elements.iter().position(|&t| t == g) else {
        return RootSum::zero(conductor);
    };
    if group.mul_idx(g, y) != group.mul_idx(y, g) {
        return RootSum::zero(conductor);
    }
    let w = cl.transversal[pos];
    let t = group.conjugate(y, group.inv_idx(w));
    label.eta_value(group, t)
}

/// The same trace from the module action: send each block through `y`,
/// factor through the transversal, and sum the diagonal character values.
pub fn double_trace_direct(group: &Group, label: &DoubleModuleLabel, g: u32, y: u32) -> RootSum {
    let conductor = group.exponent() as u32;
    let cl = &group.classes()[label.class_index];
    let s = cl.rep;
    let mut acc = RootSum::zero(conductor);
    for (pos, &graded) in cl.elements.iter().enumerate() {
        if graded != g {
            continue;
        }
        let u_i = group.inv_idx(cl.transversal[pos]);
        let image_grade = group.mul_idx(group.mul_idx(y, graded), group.inv_idx(y));
        let image_pos = cl
            .elements
            .iter()
            .position(|&t| t == image_grade)
            .expect("conjugation permutes the class");
        if image_pos != pos {
            continue;
        }
        let u_j = group.inv_idx(cl.transversal[image_pos]);
        let gamma = group.mul_idx(group.inv_idx(u_j), group.mul_idx(y, u_i));
        assert_eq!(
            group.mul_idx(gamma, s),
            group.mul_idx(s, gamma),
            "factorization lands in the centralizer"
        );
        acc = acc.add(&label.eta_value(group, gamma));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::double_indicators::enumerate_double_irreducibles;
    use crate::groups::GroupSpec;

    #[test]
    fn closed_trace_matches_module_walk() {
        for spec in [
            GroupSpec::metacyclic(8, 2, 3, 1),
            GroupSpec::metacyclic(6, 2, 5, 1),
            GroupSpec::quaternion(2),
            GroupSpec::quaternion(3),
        ] {
            let group = Group::new(spec).unwrap();
            let labels = enumerate_double_irreducibles(&group).unwrap();
            for label in &labels {
                for g in 0..group.order() as u32 {
                    for y in 0..group.order() as u32 {
                        let closed = double_trace(&group, label, g, y);
                        let walked = double_trace_direct(&group, label, g, y);
                        assert!(
                            closed.value_eq(&walked),
                            "trace mismatch for {} at g={g}, y={y} in {spec}",
                            label.id
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn trace_at_identity_projection_gives_character_degree() {
        let group = Group::new(GroupSpec::quaternion(2)).unwrap();
        let identity = 0;
        let labels = enumerate_double_irreducibles(&group).unwrap();
        for label in &labels {
            let cl = &group.classes()[label.class_index];
            let mut total = 0i64;
            for &g in &cl.elements {
                let tr = double_trace(&group, label, g, identity);
                total += i64::try_from(tr.terms()).unwrap();
            }
            assert_eq!(total as u64, label.dim, "dimension from identity traces");
        }
    }
}
