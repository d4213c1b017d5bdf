//! Exact linear algebra over the rationals and the integers.

mod elim;
mod matrix;
mod normal_form;

pub use elim::{
    checked_determinant, checked_rank, clear_denominators, determinant, integer_rank,
    is_unimodular, nullspace_basis, primitive_integer_vector, rank, rational_nullspace, rref,
    small_rank, ExactScalar, Field, RowComplement,
};
pub(crate) use elim::bigint_matrix;
pub use matrix::Matrix;
pub use normal_form::{hermite_normal_form, invariant_factors, is_saturated, smith_normal_form};
