use serde::{Deserialize, Serialize};

use super::expand::det_expand_with_budget;
use super::support::{p_count_formula, per_support_count};
use crate::error::{Error, Result};
use crate::exactnum::ntheory::is_prime_power;
use crate::exactnum::BigScalar;

/// Term counts of the determinant and the permanent of `Circ(x_0, …, x_{N-1})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DpComparison {
    pub n: usize,
    pub d: BigScalar,
    pub p: BigScalar,
    pub equal: bool,
    pub prime_power: bool,
}

/// Computes `d(N)` by full expansion and `p(N)` by the closed formula, checks
/// the formula against a direct count of the permanent's support, and checks
/// that `d(N) = p(N)` holds exactly when `N` is a prime power (or `N = 1`).
pub fn compare_dp(n: usize, budget: u64) -> Result<DpComparison> {
    let report = det_expand_with_budget(n, budget)?;
    let p = p_count_formula(n)?;
    let enumerated = per_support_count(n);
    if p != BigScalar::from(enumerated) {
        return Err(Error::Internal(format!(
            "p({n}) formula gives {p} but the support has {enumerated} monomials"
        )));
    }
    let d = BigScalar::from(report.count);
    let equal = d == p;
    let prime_power = is_prime_power(n as u64).is_some();
    if equal != (prime_power || n == 1) {
        return Err(Error::Internal(format!(
            "N = {n}: d = {d}, p = {p}, prime power = {prime_power}"
        )));
    }
    Ok(DpComparison {
        n,
        d,
        p,
        equal,
        prime_power,
    })
}
