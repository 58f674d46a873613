//! Closed-form indicator values, read off divisibility conditions on the
//! power `m` against the character label parameters.

use super::IndicatorError;
use crate::characters::CharLabel;
use crate::exact_arith::mod_mul;
use crate::groups::GroupSpec;

/// Whether `modulus` divides `a * b`, without overflow.
pub(crate) fn divides_product(modulus: u64, a: u64, b: u64) -> bool {
    mod_mul(a % modulus, b % modulus, modulus) == 0
}

fn unknown(spec: &GroupSpec, label: &CharLabel) -> IndicatorError {
    IndicatorError::UnknownLabel(format!("{label} over {spec}"))
}

/// Closed-form `nu_m` for the irreducible character named by `label`.
pub fn nu_group_formula(
    spec: &GroupSpec,
    label: &CharLabel,
    m: u64,
) -> Result<i64, IndicatorError> {
    spec.validate()?;
    match (*spec, *label) {
        (GroupSpec::Metacyclic { q, l, .. }, CharLabel::LinearMeta { s, t }) => {
            let gc = spec.constants()?;
            if s >= q * l || t >= gc.c {
                return Err(unknown(spec, label));
            }
            Ok(i64::from(
                divides_product(gc.c, m, t) && divides_product(q * l, m, s),
            ))
        }
        (GroupSpec::Metacyclic { k, q, l, .. }, CharLabel::InducedMeta { r, s }) => {
            let gc = spec.constants()?;
            if r == 0 || r >= k || r % (k / gc.c) == 0 || s >= l {
                return Err(unknown(spec, label));
            }
            let k_mr = divides_product(k, m, r);
            let l_ms = divides_product(l, m, s);
            if !m.is_multiple_of(q) {
                return Ok(i64::from(k_mr && l_ms));
            }
            let kq = k * q;
            let kq_mdr = mod_mul(mod_mul(m % kq, gc.d_mod_kq, kq), r % kq, kq) == 0;
            let lq_ms = divides_product(l * q, m, s);
            Ok(if k_mr && lq_ms {
                q as i64
            } else if !k_mr && kq_mdr && lq_ms {
                q as i64 - 1
            } else if l % q == 0 && !k_mr && kq_mdr && l_ms && !lq_ms {
                -1
            } else {
                0
            })
        }
        (GroupSpec::Quaternion { n }, CharLabel::LinearQuat { e1, e2 }) => {
            if e1 > 1 || e2 > 1 {
                return Err(unknown(spec, label));
            }
            let a_ok = m.is_multiple_of(2) || e1 == 0;
            let b_ok = if n % 2 == 1 {
                ((m % 4) * ((2 * e2 + e1) % 4)).is_multiple_of(4)
            } else {
                m.is_multiple_of(2) || e2 == 0
            };
            Ok(i64::from(a_ok && b_ok))
        }
        (GroupSpec::Quaternion { n }, CharLabel::Quat2Dim { j }) => {
            if j == 0 || j >= 2 * n || j % n == 0 {
                return Err(unknown(spec, label));
            }
            let mj_2n = divides_product(2 * n, m, j);
            if !m.is_multiple_of(2) {
                return Ok(i64::from(mj_2n));
            }
            let mj_4 = divides_product(4, m, j);
            Ok(match (mj_4, mj_2n) {
                (true, true) => 2,
                (true, false) => 1,
                (false, true) => 0,
                (false, false) => -1,
            })
        }
        _ => Err(unknown(spec, label)),
    }
}
