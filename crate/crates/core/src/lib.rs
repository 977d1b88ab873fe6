//! Exact arithmetic for Sp(n) Verlinde algebras.
//!
//! The crate is organised bottom-up:
//! - [`exact`]: big integers, polynomials, cyclotomic fields, integer matrices
//! - [`sym`]: symplectic characters and dimensions
//! - [`fusion`]: fusion rings, the handle operator and Douglas numbers
//! - [`completion`]: p-adic completions and associated graded rings
//! - [`ktheory`]: twisted K-theory models of loop-space quotients

pub mod completion;
pub mod error;
pub mod exact;
pub mod fusion;
pub mod ktheory;
pub mod sym;

pub use error::{Error, Result};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
