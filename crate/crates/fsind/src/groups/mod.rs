//! Concrete finite groups of the two supported families: split metacyclic
//! groups `Z_k x| Z_{ql}` with a prime-order twist and generalized
//! quaternion groups `Q_4n`.

pub mod element;
pub mod gm;
pub mod group;
pub mod spec;
pub mod split;

pub use element::GroupElement;
pub use gm::{gm_member_formula, gm_set_product, GmSweep};
pub use group::{ConjugacyClass, Group};
pub use spec::GroupSpec;
pub use split::{split_applicability, verify_split, SplitReport};

use thiserror::Error;

/// Largest group order that will be materialized with full multiplication
/// tables. Closed-form arithmetic has no such bound.
pub const MAX_TABLE_ORDER: u64 = 2048;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("invalid group parameters: {0}")]
    InvalidSpec(String),
    #[error("group of order {0} exceeds the table ceiling of {MAX_TABLE_ORDER}")]
    TooLarge(u64),
    #[error("structure check failed: {0}")]
    ClosedFormMismatch(String),
    #[error("unsupported operation: {0}")]
    Unsupported(String),
}

impl From<crate::exact_arith::ArithError> for GroupError {
    fn from(err: crate::exact_arith::ArithError) -> GroupError {
        GroupError::InvalidSpec(err.to_string())
    }
}
