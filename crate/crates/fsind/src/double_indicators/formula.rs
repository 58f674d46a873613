//! Closed-form indicators for simple modules of the double, keyed on
//! divisibility of the power `m` against the label parameters.

use super::labels::{DoubleModuleLabel, LabelParams};
use super::IndicatorError;
use crate::exact_arith::{gcd, mod_mul, type2_constants, GroupConstants};
use crate::group_indicators::nu_group_formula;
use crate::groups::{Group, GroupSpec};

fn divides_product(modulus: u64, a: u64, b: u64) -> bool {
    mod_mul(a % modulus, b % modulus, modulus) == 0
}

/// `kq | m*d*i`, all inputs reduced mod `kq` first.
fn kq_divides_md(gc: &GroupConstants, m: u64, i: u64) -> bool {
    let kq = gc.kq();
    mod_mul(mod_mul(m % kq, gc.d_mod_kq, kq), i % kq, kq) == 0
}

/// Closed-form `nu_m` for the simple module named by `label`.
pub fn nu_double_formula(
    group: &Group,
    label: &DoubleModuleLabel,
    m: u64,
) -> Result<i64, IndicatorError> {
    match label.params {
        LabelParams::Central { label: chl } => {
            let rep = group.classes()[label.class_index].rep;
            if m.is_multiple_of(group.element_order(rep)) {
                nu_group_formula(&group.spec(), &chl, m)
            } else {
                Ok(0)
            }
        }
        LabelParams::TypeI { i, j, r, s } => {
            let gc = group.constants().expect("metacyclic constants");
            Ok(type1_value(gc, m, i, j, r, s))
        }
        LabelParams::TypeII { i, j, r, s } => {
            let gc = group.constants().expect("metacyclic constants");
            type2_value(gc, &label.id, m, i, j, r, s)
        }
        LabelParams::QuatRotation { i, j } => {
            let GroupSpec::Quaternion { n } = group.spec() else {
                unreachable!("rotation labels only arise over quaternion groups")
            };
            let two_n = 2 * n;
            let mut nu = i64::from(divides_product(two_n, m, i) && divides_product(two_n, m, j));
            if m.is_multiple_of(2) {
                nu += if divides_product(4, m, j) { 1 } else { -1 };
            }
            Ok(nu)
        }
        LabelParams::QuatReflection { chi_a_n, .. } => {
            let GroupSpec::Quaternion { n } = group.spec() else {
                unreachable!("reflection labels only arise over quaternion groups")
            };
            Ok(if !m.is_multiple_of(2) {
                0
            } else if m.is_multiple_of(4) {
                gcd(m / 2, n) as i64
            } else if n % 2 == 0 {
                chi_a_n * gcd(m / 2, n) as i64
            } else {
                0
            })
        }
    }
}

/// Case table for classes of `a^i b^j` with `q | j`.
pub(crate) fn type1_value(gc: &GroupConstants, m: u64, i: u64, j: u64, r: u64, s: u64) -> i64 {
    let (k, q, l) = (gc.k, gc.q, gc.l);
    if !divides_product(q * l, m, j) {
        return 0;
    }
    let k_mi = divides_product(k, m, i);
    let k_mr = divides_product(k, m, r);
    let l_ms = divides_product(l, m, s);
    let direct = i64::from(k_mi && k_mr && l_ms);
    if !m.is_multiple_of(q) {
        return direct;
    }
    let lq_ms = divides_product(l * q, m, s);
    let split = if kq_divides_md(gc, m, i) {
        if kq_divides_md(gc, m, r) && lq_ms {
            q as i64 - 1
        } else if l % q == 0 && kq_divides_md(gc, m, r) && l_ms && !lq_ms {
            -1
        } else {
            0
        }
    } else {
        0
    };
    direct + split
}

/// Case table for classes of `a^i b^u` with `q` not dividing `u`.
pub(crate) fn type2_value(
    gc: &GroupConstants,
    id: &str,
    m: u64,
    i: u64,
    j: u64,
    r: u64,
    s: u64,
) -> Result<i64, IndicatorError> {
    if !divides_product(gc.q * gc.l, m, j) {
        return Ok(0);
    }
    debug_assert_eq!(m % gc.q, 0, "q divides m whenever ql divides mj with q not dividing j");
    if gc.d_mod_k() == 0 && gc.l == 1 {
        return type2_value_d0(gc, id, m);
    }
    type2_value_general(gc, id, m, i, r, s)
}

/// The full type II evaluation; callers must ensure `q | m`.
pub(crate) fn type2_value_general(
    gc: &GroupConstants,
    id: &str,
    m: u64,
    i: u64,
    r: u64,
    s: u64,
) -> Result<i64, IndicatorError> {
    let (k, q, l, c) = (gc.k, gc.q, gc.l, gc.c);
    if !m.is_multiple_of(q) {
        return Ok(0);
    }
    let t2 = type2_constants(gc, m, i, r).map_err(|e| {
        IndicatorError::NotAnInteger(format!("type II constants for {id} at m={m}: {e}"))
    })?;
    let l_ms = divides_product(l, m, s);
    let lq_ms = divides_product(l * q, m, s);
    let mut numerator = 0i64;
    match t2 {
        Some(t2) => {
            let h = t2.h_m;
            let h_mr = mod_mul(
                mod_mul((m / q) % c, (k / h) % c, c),
                mod_mul(gc.d_prime % c, r % c, c),
                c,
            ) == 0;
            if h_mr && l_ms {
                let xi = t2.xi_sign().expect("xi is a sign once h divides mr");
                numerator += 2 * xi * h as i64;
            }
        }
        None => debug_assert!(
            !kq_divides_md(gc, m, i),
            "kq | mdi forces h | mi, so no contribution can be skipped"
        ),
    }
    if kq_divides_md(gc, m, i) {
        if kq_divides_md(gc, m, r) && lq_ms {
            numerator += (k * (q - 2)) as i64;
        } else if l % q == 0 && kq_divides_md(gc, m, r) && l_ms && !lq_ms {
            numerator -= 2 * k as i64;
        }
    }
    let cq = (c * q) as i64;
    if numerator % cq != 0 {
        return Err(IndicatorError::NotAnInteger(format!(
            "type II numerator {numerator} for {id} at m={m} is not divisible by cq={cq}"
        )));
    }
    Ok(numerator / cq)
}

/// Fast path when `d = 0 mod k` and `l = 1`: `(2 gcd(m,k) + k(q-2)) / (cq)`.
pub(crate) fn type2_value_d0(
    gc: &GroupConstants,
    id: &str,
    m: u64,
) -> Result<i64, IndicatorError> {
    debug_assert!(gc.d_mod_k() == 0 && gc.l == 1);
    if !m.is_multiple_of(gc.q) {
        return Ok(0);
    }
    let numerator = (2 * gcd(m, gc.k) + gc.k * (gc.q - 2)) as i64;
    let cq = (gc.c * gc.q) as i64;
    if numerator % cq != 0 {
        return Err(IndicatorError::NotAnInteger(format!(
            "degenerate type II numerator {numerator} for {id} at m={m} not divisible by cq={cq}"
        )));
    }
    Ok(numerator / cq)
}
