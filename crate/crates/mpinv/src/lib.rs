//! File formats, fuzz and oracle drivers, and command implementations on top
//! of `mpinv-core`.

pub mod commands;
pub mod fuzz;
pub mod json;
pub mod oracle;
pub mod report;
