//! Exact arithmetic: modular helpers, cyclotomic numbers with rational
//! coefficients, and the derived constants attached to a metacyclic group.

pub mod constants;
pub mod cyclotomic;
pub mod modular;

pub use constants::{type2_constants, GroupConstants, TypeIIData};
pub use cyclotomic::{cyc_table, CycTable, Cyclotomic};
pub use modular::{
    egcd, gcd, is_prime, lcm, mod_inv, mod_mul, mod_pow, mod_signed, solve_unit_congruence,
};

use thiserror::Error;

/// Errors raised by exact-arithmetic operations.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ArithError {
    /// A cyclotomic value was asked for as a rational integer but is not one.
    #[error("cyclotomic value is not a rational integer: {0}")]
    NotAnInteger(String),
    /// A cyclotomic value was asked for as a rational number but is not one.
    #[error("cyclotomic value is not rational: {0}")]
    NotRational(String),
    /// Two operands live in cyclotomic fields of different conductors.
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u32, u32),
    /// The requested constants only exist for metacyclic presentations.
    #[error("invalid specification: {0}")]
    InvalidSpec(String),
    /// `type2_constants` requires `q | m`.
    #[error("not divisible: {0}")]
    NotDivisible(String),
}
