//! File formats and the command-line front end for `ecswitch-core`.

pub mod cli;
pub mod format;

pub use cli::run;
