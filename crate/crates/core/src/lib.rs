//! Exact ADO-3 and Links-Gould invariants of braid closures.
//!
//! The crate evaluates both invariants as operator invariants of braid
//! closures over exact rings and provides the verification harness that
//! checks `ADO_3(L; t) = LG(L; t^2, w^2 t^-2)` on the finite families of
//! 4- and 5-braids coming from the cubic Hecke algebra.

pub mod braid;
pub mod cli;
pub mod hecke;
pub mod invariant;
pub mod rep;
pub mod ring;
pub mod verify;

pub use braid::{parse_braid, BraidError, BraidWord, ClosureInfo};
