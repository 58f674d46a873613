//! Exact computation of higher Frobenius-Schur indicators for metacyclic
//! groups `Z_k x| Z_{ql}` and generalized quaternion groups `Q_4n`, together
//! with the irreducible modules of their Drinfel'd doubles.
//!
//! Every quantity is computed twice: once from closed-form divisibility
//! rules and once by brute-force summation over the group, with exact
//! cyclotomic arithmetic throughout. The `scan` module drives grid-scale
//! cross-validation and powers the `fsind` command-line tool.

pub mod characters;
pub mod double_indicators;
pub mod exact_arith;
pub mod group_indicators;
pub mod groups;
pub mod scan;
