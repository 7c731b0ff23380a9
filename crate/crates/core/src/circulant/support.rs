//! The permanent's support and its size.

use crate::error::{Error, Result};
use crate::exactnum::{binomial, divisors, euler_phi, BigScalar};
use crate::mpoly::{for_each_congruent_monomial, multiset_of, ExponentVector, MultisetIndex};

/// Weights `1, 2, …, N` of the congruence `a_0 + 2a_1 + … + N a_{N-1} ≡ 0 (mod N)`
/// on multiplicities.
fn permanent_weights(n: usize) -> Vec<u64> {
    (1..=n as u64).collect()
}

/// Visits the multiplicity vector of every monomial of the permanent.
pub fn for_each_per_support<F: FnMut(&[u16])>(n: usize, visit: F) {
    for_each_congruent_monomial(n, n, &permanent_weights(n), n.max(1) as u64, visit);
}

/// Monomials of `per(Circ(x_0, …, x_{N-1}))` as multisets, ascending.
pub fn per_support(n: usize) -> Vec<MultisetIndex> {
    let mut out = Vec::new();
    for_each_per_support(n, |e| out.push(multiset_of(&ExponentVector::new(e.to_vec()))));
    out
}

/// `|per_support(N)|` by walking the solutions without storing them.
pub fn per_support_count(n: usize) -> u64 {
    let mut count = 0u64;
    for_each_per_support(n, |_| count += 1);
    count
}

/// `p(N) = (1/N) Σ_{k | N} φ(N/k) C(2k-1, k)`.
pub fn p_count_formula(n: usize) -> Result<BigScalar> {
    if n == 0 {
        return Err(Error::Domain("p(N) requires N >= 1".into()));
    }
    let n64 = n as u64;
    let mut total = BigScalar::from(0);
    for k in divisors(n64)? {
        let phi = BigScalar::from(euler_phi(n64 / k)?);
        total += &(&phi * &binomial(2 * k - 1, k)?);
    }
    total
        .div_exact(&BigScalar::from(n64))
        .ok_or_else(|| Error::InexactDivision(format!("p({n}) numerator {total} not divisible by {n}")))
}

/// `a_0 + a_1 + … + a_{N-1} ≡ 0 (mod N)`.
pub fn support_congruence_check(n: usize, m: &MultisetIndex) -> bool {
    n > 0 && m.index_sum().is_multiple_of(n as u64)
}
