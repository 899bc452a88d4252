//! Arithmetic over `F_3`: scalars, packed vectors, `GF(3^t)` and row reduction.

mod ext_field;
mod gf3;
pub mod matrix;
mod trit_vec;

pub use ext_field::{ext_mul, irreducible_poly, ExtFieldElem};
pub use gf3::Gf3;
pub use trit_vec::{dot, index_vec, neg_sum_index, pow3, vec_index, TritVec};
