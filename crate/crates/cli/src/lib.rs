//! Command-line front end for the `polylog-apery-core` constructions:
//! coefficient tables, verification suites, digit extraction and
//! characteristic roots.

pub mod asymptotics;
pub mod cli;
pub mod compute;
pub mod config;
pub mod digits;
pub mod output;
pub mod recio;
pub mod roots;
pub mod verify;
