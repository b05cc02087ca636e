//! Exact verification of q-series identities at roots of unity.

pub mod arith;
pub mod bailey;
pub mod eichler;
pub mod error;
pub mod identities;
pub mod qseries;
pub mod record;

pub use error::{Error, Result};
