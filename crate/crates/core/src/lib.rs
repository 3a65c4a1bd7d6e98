//! High-precision partial fraction summation.
//!
//! The Taylor coefficients of `1/F(z)` for an infinite product
//! `F(z) = Π (1 − (z/a_n)^m)` can be computed two ways: from power sums of
//! the nodes, or as a residue series `Σ −1/(F′(a_n)·a_n^{k+1})`. This crate
//! implements both, the special functions they need, and a catalogue of
//! identity checks that compare independent evaluations.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod identities;
pub mod numeric;
pub mod oracles;
pub mod product;
pub mod special;

pub use error::{PfsError, Result};
pub use numeric::{BigComplex, BigReal, Precision, SeriesResult, SeriesStatus, SummationStrategy};
