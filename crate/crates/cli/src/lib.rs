//! Library surface of the `tracekit` command-line tool: the verb registry,
//! file schemas, output documents, and the error taxonomy. The binary in
//! `main.rs` is a thin wrapper over these.

pub mod error;
pub mod input;
pub mod output;
pub mod verbs;
