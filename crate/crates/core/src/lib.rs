//! Ternary cyclic codes `C(1,e)` and `C(1,e,s)` of length `3^m - 1`.
//!
//! The crate builds the codes from cyclotomic cosets and minimal
//! polynomials, checks the conditions that force minimum distance four,
//! certifies minimum distance by normalized low-weight codeword search, and
//! catalogs the known exponent families. Everything runs in `no_std` with
//! `alloc`; the companion `trit-codes-cli` crate adds the command line.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod codes;
pub mod conditions;
pub mod corpus;
pub mod cosets;
pub mod error;
pub mod families;
pub mod field;
pub mod planar;
pub mod poly3;

pub use error::Error;
pub use field::{FieldContext, FieldElement};
pub use poly3::{F3Poly, Factorization, Trit};
