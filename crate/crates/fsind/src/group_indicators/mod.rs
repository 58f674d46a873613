//! Higher Frobenius-Schur indicators `nu_m` for irreducible characters of
//! the base groups: an exact brute-force evaluator and closed-form case
//! tables, meant to be cross-checked against each other.

mod brute;
mod formula;

pub use brute::{
    frobenius_root_count, group_indicator_table, nu_group_brute, total_orthogonality,
};
pub use formula::nu_group_formula;

use thiserror::Error;

use crate::characters::CharError;
use crate::groups::GroupError;

/// Errors from indicator evaluation.
#[derive(Debug, Error)]
pub enum IndicatorError {
    /// The averaged character sum failed the exact integrality check.
    #[error("indicator is not an integer: {0}")]
    NotAnInteger(String),
    /// The label does not name an irreducible character of the given group.
    #[error("unknown character label: {0}")]
    UnknownLabel(String),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Group(#[from] GroupError),
}
