use serde::{Deserialize, Serialize};

use super::action::{invariant_monomials, togliatti_bound_check, GroupAction};
use super::rank::RankMethod;
use super::wlp::{wlp_kernel_witness_with_budget, wlp_rank_with};
use crate::circulant::det_expand_general_with_budget;
use crate::error::{Error, Result};
use crate::exactnum::BigScalar;
use crate::mpoly::{multiset_of, MultisetIndex};
use crate::DEFAULT_TERM_BUDGET;

/// How minimality was decided.
pub const MINIMALITY_CRITERION: &str = "every invariant monomial has a nonzero coefficient in det(A^d_alpha)";

/// Summary of the GT-system generated by the invariants of an action.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GTReport {
    pub d: usize,
    pub alpha: Vec<u32>,
    pub nvars: usize,
    pub generators: Vec<MultisetIndex>,
    pub mu: usize,
    pub togliatti_bound: BigScalar,
    pub bound_satisfied: bool,
    pub wlp_witness_verified: bool,
    pub rank: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub injective: bool,
    pub rank_method: RankMethod,
    pub minimal: bool,
    pub missing_monomials: Vec<MultisetIndex>,
    pub criterion: String,
}

pub fn minimality_check(action: &GroupAction) -> Result<GTReport> {
    minimality_check_with_budget(action, DEFAULT_TERM_BUDGET)
}

pub fn minimality_check_with_budget(action: &GroupAction, budget: u64) -> Result<GTReport> {
    let alpha = action.alpha().to_vec();
    if alpha.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidInput(format!(
            "exponents {alpha:?} reduced mod {} must be strictly increasing",
            action.d()
        )));
    }
    let generators = invariant_monomials(action);
    let bound = togliatti_bound_check(action)?;
    let det = det_expand_general_with_budget(action.d(), &alpha, budget)?;
    let witness = wlp_kernel_witness_with_budget(action, budget)?;
    if det.to_poly()? != witness.product {
        return Err(Error::Internal("ℓ·F differs from the determinant expansion".into()));
    }
    let rank = wlp_rank_with(action, Some(&witness))?;
    if rank.injective {
        return Err(Error::Internal(format!(
            "kernel witness verified but ×ℓ has full rank {}",
            rank.rank
        )));
    }

    let generators: Vec<MultisetIndex> = generators.iter().map(multiset_of).collect();
    let missing_monomials: Vec<MultisetIndex> = generators
        .iter()
        .filter(|m| det.coefficient(m).is_zero())
        .cloned()
        .collect();
    if det.count + missing_monomials.len() != generators.len() {
        return Err(Error::Internal(format!(
            "{} determinant terms and {} missing monomials do not add up to {} generators",
            det.count,
            missing_monomials.len(),
            generators.len()
        )));
    }
    Ok(GTReport {
        d: action.d(),
        nvars: action.nvars(),
        alpha,
        mu: generators.len(),
        generators,
        togliatti_bound: bound.bound,
        bound_satisfied: bound.ok,
        wlp_witness_verified: true,
        rank: rank.rank,
        source_dim: rank.source_dim,
        target_dim: rank.target_dim,
        injective: rank.injective,
        rank_method: rank.method,
        minimal: missing_monomials.is_empty(),
        missing_monomials,
        criterion: MINIMALITY_CRITERION.to_string(),
    })
}
