//! Command-line front end: one subcommand per artifact.
//!
//! Flags may also come from a line-oriented `key=value` file given with
//! `--config PATH`; keys are flag names without the leading dashes and
//! command-line flags win over file values.

mod config;
mod run;

pub use config::{parse_config, Command, RunConfig, StateArgs};
pub use run::{run, Summary};
