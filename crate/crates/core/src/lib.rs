//! Exact-rational constructions around the forgetful linear systems on
//! projective space: the system of degree-`n` forms on `P^{2n-2}` vanishing to
//! order `n-1` at a projective base, the degree `n-1` system on `P^{2n-3}`, rational
//! normal curves, Cremona inversions, stable dual trees and the bracket
//! invariants of `2n` points on the line.
//!
//! All arithmetic is exact; every check is decided without tolerances.

pub mod binary;
pub mod brackets;
pub mod cremona;
pub mod exactnum;
pub mod forms;
pub mod omega;
pub mod sampling;
pub mod suites;
pub mod trees;
pub mod veronese;

mod error;
mod memo;

pub use error::Error;
