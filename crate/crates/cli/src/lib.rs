//! Command-line front end: expression parsing, JSON and CSV output, fuzzing.

pub mod commands;
pub mod fuzz;
pub mod json;
pub mod parse;
pub mod sample;
