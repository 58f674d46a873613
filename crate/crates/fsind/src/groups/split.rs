//! Direct-factor splittings of `Z_k x|_n Z_{ql}`: the central `Z_c` part
//! splits off when `gcd(c, k/c) = 1`, and the cyclic `Z_{k/h}` part splits
//! off when `gcd(q, k/h) = 1`, with `h = gcd(d, k)`.

use super::element::GroupElement;
use super::group::Group;
use super::spec::GroupSpec;
use super::GroupError;
use crate::exact_arith::{gcd, mod_inv, mod_mul, GroupConstants};

/// Which of the two splittings apply, with the constants they depend on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitReport {
    pub c: u64,
    pub h: u64,
    /// `G = Z_c + (Z_{k/c} x| Z_{ql})` applies, i.e. `gcd(c, k/c) = 1`.
    pub center_factor: bool,
    /// `G = Z_{k/h} + (Z_h x| Z_{ql})` applies, i.e. `gcd(q, k/h) = 1`.
    pub power_factor: bool,
}

/// Applicability of both splittings from the constants alone.
pub fn split_applicability(gc: &GroupConstants) -> SplitReport {
    let h = gc.h();
    SplitReport {
        c: gc.c,
        h,
        center_factor: gcd(gc.c, gc.k / gc.c) == 1,
        power_factor: gcd(gc.q, gc.k / h) == 1,
    }
}

/// Determine applicability and, for each applicable part, exhaustively
/// verify the splitting homomorphisms on the materialized group.
pub fn verify_split(group: &Group) -> Result<SplitReport, GroupError> {
    let gc = group
        .constants()
        .ok_or_else(|| GroupError::Unsupported("splitting needs a metacyclic group".into()))?
        .clone();
    let report = split_applicability(&gc);
    if report.center_factor {
        verify_center_factor(group, &gc)?;
    }
    if report.power_factor {
        verify_power_factor(group, &gc)?;
    }
    Ok(report)
}

fn verify_center_factor(group: &Group, gc: &GroupConstants) -> Result<(), GroupError> {
    let (k, c) = (gc.k, gc.c);
    let quotient = Group::new(GroupSpec::metacyclic(k / c, gc.q, gc.n % (k / c), gc.l))?;
    let u = mod_inv(c % (k / c), k / c)
        .expect("c is invertible mod k/c when the center factor applies");

    let project = |g: GroupElement| quotient.index_of(GroupElement::new(g.i % (k / c), g.j));
    let section = |s: u32| {
        let el = quotient.element_at(s);
        group.index_of(GroupElement::new(mod_mul(mod_mul(c, u, k), el.i, k), el.j))
    };

    let fail = |what: &str| {
        Err(GroupError::ClosedFormMismatch(format!(
            "center factor splitting: {what} for {}",
            group.spec()
        )))
    };

    for g in 0..group.order() as u32 {
        for x in 0..group.order() as u32 {
            let lhs = project(group.element_at(group.mul_idx(g, x)));
            let rhs = quotient.mul_idx(
                project(group.element_at(g)),
                project(group.element_at(x)),
            );
            if lhs != rhs {
                return fail("projection is not a homomorphism");
            }
        }
    }
    for s in 0..quotient.order() as u32 {
        if project(group.element_at(section(s))) != s {
            return fail("section does not split the projection");
        }
        for t in 0..quotient.order() as u32 {
            if section(quotient.mul_idx(s, t)) != group.mul_idx(section(s), section(t)) {
                return fail("section is not a homomorphism");
            }
        }
    }
    let kernel: Vec<u32> = (0..group.order() as u32)
        .filter(|&g| project(group.element_at(g)) == 0)
        .collect();
    let central_part = group.subgroup_closure(&[group.index_of(GroupElement::new(k / c, 0))]);
    if kernel != central_part || kernel.len() as u64 != c {
        return fail("kernel is not the central cyclic part");
    }
    if !kernel.iter().all(|x| group.center().contains(x)) {
        return fail("kernel is not central");
    }
    Ok(())
}

fn verify_power_factor(group: &Group, gc: &GroupConstants) -> Result<(), GroupError> {
    let k = gc.k;
    let h = gc.h();
    let u = if k / h == 1 {
        0
    } else {
        mod_inv(gc.q % (k / h), k / h)
            .expect("q is invertible mod k/h when the power factor applies")
    };
    let coeff = mod_mul(u, gc.d_mod_k(), k);
    let retract =
        |g: GroupElement| group.index_of(GroupElement::new(mod_mul(coeff, g.i, k), 0));

    let fail = |what: &str| {
        Err(GroupError::ClosedFormMismatch(format!(
            "power factor splitting: {what} for {}",
            group.spec()
        )))
    };

    for g in 0..group.order() as u32 {
        for x in 0..group.order() as u32 {
            let lhs = retract(group.element_at(group.mul_idx(g, x)));
            let rhs = group.mul_idx(
                retract(group.element_at(g)),
                retract(group.element_at(x)),
            );
            if lhs != rhs {
                return fail("retraction is not a homomorphism");
            }
        }
    }
    let target = group.subgroup_closure(&[group.index_of(GroupElement::new(h % k, 0))]);
    if target.len() as u64 != k / h {
        return fail("target subgroup has wrong order");
    }
    for &x in &target {
        if retract(group.element_at(x)) != x {
            return fail("retraction does not fix its image pointwise");
        }
    }
    for g in 0..group.order() as u32 {
        if target.binary_search(&retract(group.element_at(g))).is_err() {
            return fail("retraction image leaves the target subgroup");
        }
        for &x in &target {
            if target
                .binary_search(&group.conjugate(x, g))
                .is_err()
            {
                return fail("target subgroup is not normal");
            }
        }
    }
    Ok(())
}
