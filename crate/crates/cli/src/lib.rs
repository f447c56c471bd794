//! Library half of the `normhull` command-line tool: body I/O, the report
//! format, the verification table, the extremal search and SVG rendering.
//! The binary in `main.rs` is a thin argument parser over these modules.

pub mod error;
pub mod io;
pub mod render;
pub mod report;
pub mod search;
pub mod verify;

pub use error::CliError;
