//! Ternary linear codes built from partial spreads of `F_3^n`.
//!
//! Two function families are supported: sums of characteristic functions of
//! spread members, and ternary functions taking the value 1 on one half of a
//! chosen set of members and 2 on the other half. For either family the crate
//! builds the code `{(a f(x) + w.x)_{x != 0}}`, computes its Walsh spectrum
//! exactly over the Eisenstein integers, derives weight distributions, and
//! decides minimality by exhaustive covering checks as well as by the Walsh
//! spectrum criterion.
//!
//! Heavy sweeps run on rayon when the `parallel` feature is enabled (the
//! default). Every sweep also accepts an explicit [`Execution`] so the
//! sequential path stays available for comparison.

pub mod algebra;
pub mod code;
mod error;
mod exec;
pub mod function;
pub mod minimality;
pub mod report;
pub mod subspace;
pub mod walsh;

pub use algebra::{dot, index_vec, pow3, vec_index, Gf3, TritVec};
pub use error::{Error, Result};
pub use exec::Execution;
