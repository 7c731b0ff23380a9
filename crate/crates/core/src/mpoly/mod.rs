//! Sparse homogeneous polynomials and the two encodings of their monomials.

mod monomial;
mod sparse;

pub use monomial::{
    count_congruent_monomials, exponent_of, for_each_congruent_monomial, multiset_of, ExponentVector, MultisetIndex,
};
pub use sparse::{mul_linear_form, reduce_coefficients, Coefficient, SparsePoly};
