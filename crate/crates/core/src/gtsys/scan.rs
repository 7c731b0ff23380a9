use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::action::GroupAction;
use super::minimality::minimality_check_with_budget;
use crate::error::{Error, Result};
use crate::exactnum::ntheory::{gcd, is_prime_power};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem49Row {
    pub n: usize,
    pub minimal: bool,
    pub prime_power: bool,
    pub consistent: bool,
}

/// Minimality of `I^N_{0,1,…,N-1}` for `N = 3..=n_max`, compared with whether
/// `N` is a prime power. Rows come back in increasing `N`.
pub fn theorem49_scan(n_max: usize, budget: u64) -> Result<Vec<Theorem49Row>> {
    (3..=n_max)
        .into_par_iter()
        .map(|n| {
            let report = minimality_check_with_budget(&GroupAction::standard(n)?, budget)?;
            let prime_power = is_prime_power(n as u64).is_some();
            Ok(Theorem49Row {
                n,
                minimal: report.minimal,
                prime_power,
                consistent: report.minimal == prime_power,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureRow {
    pub d: usize,
    pub n: u32,
    pub m: u32,
    pub minimal: bool,
    pub missing_count: usize,
}

/// Minimality of `I^d_{0,n,m}` for every `3 ≤ d ≤ d_max` and
/// `1 ≤ n < m ≤ d-1` with `gcd(n, m, d) = 1`, ordered by `(d, n, m)`.
/// Non-minimal rows are reported, not treated as errors.
pub fn conjecture_scan(d_max: usize, budget: u64) -> Result<Vec<ConjectureRow>> {
    if d_max < 3 {
        return Err(Error::InvalidInput(format!("d_max = {d_max} must be at least 3")));
    }
    let cells: Vec<(usize, u32, u32)> = (3..=d_max)
        .flat_map(|d| (1..d as u32).flat_map(move |n| (n + 1..d as u32).map(move |m| (d, n, m))))
        .filter(|&(d, n, m)| gcd(gcd(n as u64, m as u64), d as u64) == 1)
        .collect();
    cells
        .into_par_iter()
        .map(|(d, n, m)| {
            let report = minimality_check_with_budget(&GroupAction::new(d, &[0, n, m])?, budget)?;
            Ok(ConjectureRow {
                d,
                n,
                m,
                minimal: report.minimal,
                missing_count: report.missing_monomials.len(),
            })
        })
        .collect()
}
