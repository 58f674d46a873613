//! Existence of negative double indicators: a closed-form criterion on the
//! group parameters and a witness search over materialized groups.

use super::brute::nu_double_brute;
use super::formula::nu_double_formula;
use super::labels::enumerate_double_irreducibles;
use super::IndicatorError;
use crate::groups::{Group, GroupError, GroupSpec};

/// Whether some simple module of the double has a negative indicator.
///
/// For metacyclic groups with `q` coprime to `l` this happens exactly when
/// `q = 2` and `k = 2^s x` with `x` odd, `s >= 3`, and
/// `n = 2^{s-1} +- 1 (mod 2^s)`. The `q | l` case is out of scope here.
/// Quaternion groups always have one (`nu_2 = -1` at a rotation label).
pub fn negative_exists(spec: &GroupSpec) -> Result<bool, IndicatorError> {
    spec.validate()?;
    match *spec {
        GroupSpec::Quaternion { .. } => Ok(true),
        GroupSpec::Metacyclic { k, q, n, l } => {
            if l % q == 0 {
                return Err(IndicatorError::Group(GroupError::Unsupported(format!(
                    "negativity classification requires q coprime to l, got {spec}"
                ))));
            }
            if q != 2 {
                return Ok(false);
            }
            let s = k.trailing_zeros();
            if s < 3 {
                return Ok(false);
            }
            let modulus = 1u64 << s;
            let half = 1u64 << (s - 1);
            Ok(n % modulus == half - 1 || n % modulus == half + 1)
        }
    }
}

/// First `(label id, m, nu)` with a negative closed-form value, re-verified
/// by brute force; `None` when no negative value exists up to `m_max`.
pub fn find_negative_witness(
    group: &Group,
    m_max: u64,
) -> Result<Option<(String, u64, i64)>, IndicatorError> {
    let labels = enumerate_double_irreducibles(group)?;
    for m in 1..=m_max {
        for label in &labels {
            let nu = nu_double_formula(group, label, m)?;
            if nu < 0 {
                let brute = nu_double_brute(group, label, m)?;
                assert_eq!(brute, nu, "negative witness must replay by brute force");
                return Ok(Some((label.id.clone(), m, nu)));
            }
        }
    }
    Ok(None)
}
