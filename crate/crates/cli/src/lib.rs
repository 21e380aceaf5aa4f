//! Command line front end for the cohomology crates: JSON instance files in,
//! deterministic reports out.
//!
//! The pieces are separable. [`instance`] loads and checks files,
//! [`commands`] runs a parsed request against one, and [`report`] renders
//! the outcome as text or as canonical JSON. The binary is a thin argument
//! parser over [`commands::run`].

pub mod commands;
pub mod error;
pub mod instance;
pub mod report;

pub use commands::{run, Request};
pub use error::CliError;
pub use instance::{load, parse, resolve, InstanceFile, NamedCocycle, ResolvedInstance};
pub use report::{render_finite_group, render_group, Report, ReportEntry, Verdict};
