//! File formats, reports, catalog scans and the command-line front end
//! for [`autocomm_core`].

pub mod cli;
pub mod error;
pub mod format;
pub mod input;
pub mod report;
pub mod scan;

pub use autocomm_core as core;
pub use error::CliError;
