//! Shared test support: independent oracles and seeded random corpora.
//!
//! Each integration test target compiles this module separately and uses a
//! different subset of it.
#![allow(dead_code)]

pub mod corpus;
pub mod oracle;
