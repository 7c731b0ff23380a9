use serde::{Deserialize, Serialize};

use crate::circulant::p_count_formula;
use crate::error::{Error, Result};
use crate::exactnum::ntheory::gcd;
use crate::exactnum::{binomial, BigScalar};
use crate::mpoly::{count_congruent_monomials, for_each_congruent_monomial, ExponentVector};

/// Diagonal action of the cyclic group of order `d` with character exponents
/// `alpha`, stored reduced mod `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupAction {
    d: usize,
    alpha: Vec<u32>,
}

impl GroupAction {
    pub fn new(d: usize, alpha: &[u32]) -> Result<GroupAction> {
        if d < 3 {
            return Err(Error::InvalidAction(format!("d = {d} must be at least 3")));
        }
        if alpha.len() < 3 {
            return Err(Error::InvalidAction(format!(
                "{} variables given, at least 3 are required",
                alpha.len()
            )));
        }
        let g = alpha.iter().fold(d as u64, |g, &a| gcd(g, a as u64));
        if g != 1 {
            return Err(Error::InvalidAction(format!("gcd({alpha:?}, {d}) = {g} is not 1")));
        }
        Ok(GroupAction {
            d,
            alpha: alpha.iter().map(|&a| a % d as u32).collect(),
        })
    }

    /// `d = N`, `alpha = (0, 1, …, N-1)`.
    pub fn standard(n: usize) -> Result<GroupAction> {
        GroupAction::new(n, &(0..n as u32).collect::<Vec<_>>())
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn alpha(&self) -> &[u32] {
        &self.alpha
    }

    pub fn nvars(&self) -> usize {
        self.alpha.len()
    }

    fn weights(&self) -> Vec<u64> {
        self.alpha.iter().map(|&a| a as u64).collect()
    }

    /// `Σ α_i e_i ≡ 0 (mod d)`.
    pub fn is_invariant(&self, exps: &[u16]) -> bool {
        exps.iter()
            .zip(&self.alpha)
            .map(|(&e, &a)| e as u64 * a as u64)
            .sum::<u64>()
            % self.d as u64
            == 0
    }
}

/// Invariant monomials of degree `d`, in decreasing graded-lex order.
pub fn invariant_monomials(action: &GroupAction) -> Vec<ExponentVector> {
    let mut out = Vec::new();
    for_each_congruent_monomial(action.nvars(), action.d, &action.weights(), action.d as u64, |e| {
        out.push(ExponentVector::new(e.to_vec()))
    });
    out
}

/// Number of invariant monomials of degree `d`, without listing them.
pub fn invariant_count(action: &GroupAction) -> u128 {
    count_congruent_monomials(action.nvars(), action.d, &action.weights(), action.d as u64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TogliattiCheck {
    pub mu: BigScalar,
    /// `C(N + d - 2, N - 2)`
    pub bound: BigScalar,
    pub ok: bool,
    /// For the standard action only: `p(N) ≤ C(2N - 2, N)`.
    pub count_inequality: Option<bool>,
}

pub fn togliatti_bound_check(action: &GroupAction) -> Result<TogliattiCheck> {
    let n = action.nvars() as u64;
    let d = action.d as u64;
    let mu = BigScalar::from(invariant_count(action));
    let bound = binomial(n + d - 2, n - 2)?;
    let standard = action.d == action.nvars() && action.alpha.iter().enumerate().all(|(i, &a)| a as usize == i);
    let count_inequality = if standard {
        Some(p_count_formula(action.d)? <= binomial(2 * n - 2, n)?)
    } else {
        None
    };
    Ok(TogliattiCheck {
        ok: mu <= bound,
        mu,
        bound,
        count_inequality,
    })
}
