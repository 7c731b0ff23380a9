//! Exact integer and cyclotomic arithmetic.
//!
//! Roots of unity are never approximated: the primitive `N`-th root is the
//! class of `x` in `Z[x]/(x^N - 1)`, products are cyclic convolutions, and an
//! element is turned back into an ordinary integer only by exact division
//! by the cyclotomic polynomial `Phi_N`.

mod cyclo;
mod intpoly;
pub mod ntheory;
mod scalar;

pub use cyclo::CycloElem;
pub use intpoly::{cyclotomic_poly, IntPolynomial};
pub use ntheory::{bezout, binomial, divisors, euler_phi, factorize, gcd, is_prime_power};
pub use scalar::BigScalar;

use crate::error::Result;

/// Cyclic convolution of two elements of the same order.
pub fn cyclo_mul(a: &CycloElem, b: &CycloElem) -> Result<CycloElem> {
    a.mul(b)
}

/// Reduce modulo `Phi_N`; succeeds only when the result is a constant.
pub fn cyclo_to_int(a: &CycloElem) -> Result<BigScalar> {
    a.to_integer()
}
