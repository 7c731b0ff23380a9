//! Symbolic expansion of circulant determinants and permanents, their
//! supports and term counts, and explicit vanishing coefficients.

mod compare;
mod expand;
mod leibniz;
mod oracle;
mod report;
mod support;
mod vanishing;

pub use compare::{compare_dp, DpComparison};
pub use expand::{
    det_expand, det_expand_general, det_expand_general_with_budget, det_expand_with_budget, eigenform,
    eigenform_product, evaluate_f64, term_bound, validate_positions,
};
pub use leibniz::{det_brute_force, per_expand, BRUTE_FORCE_LIMIT, PERMANENT_LIMIT};
pub use oracle::{coefficient_oracle, coefficient_oracle_general, ORACLE_LIMIT};
pub use report::{ExpansionKind, ExpansionReport, Term};
pub use support::{for_each_per_support, p_count_formula, per_support, per_support_count, support_congruence_check};
pub use vanishing::{coprime_split, in_permanent_support, theorem_witness, vanishing_predicate, WitnessParams};
