//! Exact rational scalars and linear algebra.

mod matrix;
mod rat;
mod sparse;

pub use matrix::{annihilation_check, mat_kernel, mat_mul, solve_left_inverse, EntryDiff, RatMatrix};
pub use rat::{binom, binom_i, common_denominator, Rat};
pub use sparse::SparseMat;
