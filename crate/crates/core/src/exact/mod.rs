//! Exact arithmetic primitives.

pub mod abelian;
pub mod arith;
pub mod cyclotomic;
pub mod lattice;
pub mod matrix;
pub mod multipoly;
pub mod poly;
pub mod snf;

pub use abelian::{AbelianPStructure, Exponent};
pub use arith::{binomial, binomial_gen, gcd_all, prime_factors, valuation};
pub use cyclotomic::{cyclotomic_poly, CycField, CycNumber};
pub use lattice::Lattice;
pub use matrix::{det_bareiss, det_minors, inverse_exact, solve_exact, IntMatrix};
pub use multipoly::MultiPoly;
pub use poly::UniPoly;
pub use snf::{cokernel_invariants, smith_normal_form, snf_diagonal, SnfResult};
