//! Exact symbolic expansion of determinants and permanents of generic
//! circulant matrices, and the monomial ideals built from them.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactnum`]: big integers, cyclotomic integers, `Phi_N`, number theory.
//! * [`mpoly`]: sparse homogeneous polynomials and monomial encodings.
//! * [`circulant`]: determinant/permanent expansion, term counts, the
//!   independent coefficient oracle and the non-prime-power zero witness.
//! * [`gtsys`]: invariant monomial ideals of cyclic group actions, their
//!   weak Lefschetz failure and minimality.

pub mod circulant;
mod error;
pub mod exactnum;
pub mod gtsys;
pub mod mpoly;

pub use error::{Error, ErrorClass, Result};
pub use exactnum::{BigScalar, CycloElem, IntPolynomial};
pub use mpoly::{ExponentVector, MultisetIndex, SparsePoly};

/// Default ceiling on the number of monomials an expansion may touch.
pub const DEFAULT_TERM_BUDGET: u64 = 5_000_000;
