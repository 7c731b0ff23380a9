//! GT-systems: ideals generated by the invariant monomials of a diagonal
//! cyclic action, their failure of the weak Lefschetz property in degree
//! `d-1`, and minimality via the determinant of `A^d_α`.

mod action;
mod minimality;
pub mod rank;
mod scan;
mod wlp;

pub use action::{invariant_count, invariant_monomials, togliatti_bound_check, GroupAction, TogliattiCheck};
pub use minimality::{minimality_check, minimality_check_with_budget, GTReport, MINIMALITY_CRITERION};
pub use rank::RankMethod;
pub use scan::{conjecture_scan, theorem49_scan, ConjectureRow, Theorem49Row};
pub use wlp::{
    multiplication_matrix, wlp_kernel_witness, wlp_kernel_witness_with_budget, wlp_rank, wlp_rank_with, KernelWitness,
    WlpRank, BAREISS_CELL_LIMIT,
};
