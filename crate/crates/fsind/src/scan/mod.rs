//! Grid sweeps and report assembly: cross-validation of every closed form
//! against brute force, themed scans, and JSON/CSV report rendering.

mod checks;
mod commands;
mod grid;
mod report;

pub use checks::{
    arithmetic_check, is_dihedral, negatives_findings, orthogonality_findings, splitting_hit,
    verify_spec, DOUBLE_TABLE_CEILING, GROUP_CHECK_CEILING, NEGATIVITY_CEILING,
};
pub use commands::{cmd_indicators, cmd_info, cmd_scan, cmd_verify, info_text, ScanError, ScanKind};
pub use grid::Grid;
pub use report::{Finding, Meta, Report, Row, RowBody, RowKind, Status, Summary};
