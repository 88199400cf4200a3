//! File formats and the command-line front end for [`boolfourier`].

pub mod cli;
mod error;
pub mod family;
pub mod format;
pub mod report;
pub mod spectrum_io;

pub use error::ToolError;
