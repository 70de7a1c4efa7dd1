//! Command-line front end for `akc-core`: a small declaration language for
//! Lie algebras with geometric structures, a catalog of built-in examples,
//! and text/JSON report rendering.

pub mod catalog;
pub mod cli;
pub mod dsl;
pub mod elaborate;
pub mod render;

pub use cli::run_cli;
pub use elaborate::{elaborate, Diagnostic, Elaboration};
