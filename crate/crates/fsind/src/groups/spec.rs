//! Parameter descriptions of the supported group families.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::GroupError;
use crate::exact_arith::GroupConstants;

/// Parameters identifying a group from one of the supported families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GroupSpec {
    /// `Z_k x|_n Z_{ql}` with presentation
    /// `<a, b | a^k = b^{ql} = 1, b a b^-1 = a^n>`, `q` prime,
    /// `n^q = 1 mod k` and `n != 1 mod k`.
    Metacyclic { k: u64, q: u64, n: u64, l: u64 },
    /// `Q_4n` with presentation
    /// `<a, b | a^{2n} = 1, b^2 = a^n, b a b^-1 = a^-1>`, `n >= 2`.
    Quaternion { n: u64 },
}

impl GroupSpec {
    pub fn metacyclic(k: u64, q: u64, n: u64, l: u64) -> GroupSpec {
        GroupSpec::Metacyclic { k, q, n, l }
    }

    pub fn quaternion(n: u64) -> GroupSpec {
        GroupSpec::Quaternion { n }
    }

    pub fn validate(&self) -> Result<(), GroupError> {
        match *self {
            GroupSpec::Metacyclic { k, q, n, l } => {
                GroupConstants::new(k, q, n, l)?;
                Ok(())
            }
            GroupSpec::Quaternion { n } => {
                if n < 2 {
                    Err(GroupError::InvalidSpec(format!(
                        "quaternion parameter n = {n} must be at least 2"
                    )))
                } else {
                    Ok(())
                }
            }
        }
    }

    pub fn order(&self) -> u64 {
        match *self {
            GroupSpec::Metacyclic { k, q, l, .. } => k * q * l,
            GroupSpec::Quaternion { n } => 4 * n,
        }
    }

    /// Derived arithmetic constants; only metacyclic groups have them.
    pub fn constants(&self) -> Result<GroupConstants, GroupError> {
        match *self {
            GroupSpec::Metacyclic { k, q, n, l } => Ok(GroupConstants::new(k, q, n, l)?),
            GroupSpec::Quaternion { n } => Err(GroupError::Unsupported(format!(
                "quaternion group Q_{} has no metacyclic constants",
                4 * n
            ))),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupSpec::Metacyclic { k, q, n, l } => {
                write!(f, "meta(k={k},q={q},n={n},l={l})")
            }
            GroupSpec::Quaternion { n } => write!(f, "quat(n={n})"),
        }
    }
}
