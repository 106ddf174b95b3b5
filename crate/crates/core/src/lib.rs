//! Exact computations in Deligne's interpolation categories Rep(GL_t),
//! Rep(O_t) and Rep(Sp_2t).
//!
//! Everything is exact: rationals, polynomials and rational functions in the
//! rank parameter `t`, and power series in `q` truncated at a chosen order.
//! Each interpolated quantity is paired with a classical finite-rank oracle
//! so the two can be compared at integer rank.

pub mod affine;
pub mod arith;
pub mod center;
pub mod diagrams;
pub mod dims;
mod error;
pub mod invariants;
pub mod par;
pub mod partitions;
pub mod symfunc;
pub mod verify;

pub use error::Error;
