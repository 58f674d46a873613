//! Exact character data: irreducible character tables for the supported
//! families, duals of abelian subgroups, and induction from subgroups.

pub mod linear;
pub mod root_sum;
pub mod table;

pub use linear::{abelian_dual, restrict_to_center, CentralRestriction, LinearCharacter};
pub use root_sum::RootSum;
pub use table::{
    induced_class_values, inner_product, irreducible_characters, CharLabel, Character,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CharError {
    #[error("subgroup is not abelian: {0}")]
    NotAbelian(String),
    #[error("character table check failed: {0}")]
    TableInvalid(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}
