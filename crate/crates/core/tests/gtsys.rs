mod common;

use std::collections::BTreeSet;

use circulant_core::circulant::{compare_dp, det_expand_general, per_support};
use circulant_core::exactnum::{binomial, is_prime_power};
use circulant_core::gtsys::*;
use circulant_core::mpoly::multiset_of;
use circulant_core::{BigScalar, DEFAULT_TERM_BUDGET};
use common::*;

/// Every valid action with `3 ≤ N ≤ nmax`, `3 ≤ d ≤ dmax` and strictly
/// increasing `α ⊂ [0, d)`.
fn actions_up_to(nmax: usize, dmax: usize) -> Vec<GroupAction> {
    fn rec(d: usize, n: usize, start: u32, cur: &mut Vec<u32>, out: &mut Vec<GroupAction>) {
        if cur.len() == n {
            if let Ok(a) = GroupAction::new(d, cur) {
                out.push(a);
            }
            return;
        }
        for v in start..d as u32 {
            cur.push(v);
            rec(d, n, v + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for d in 3..=dmax {
        for n in 3..=nmax.min(d) {
            rec(d, n, 0, &mut Vec::new(), &mut out);
        }
    }
    out
}

#[test]
fn generators_are_invariant_and_complete() {
    for a in actions_up_to(4, 7) {
        let gens = invariant_monomials(&a);
        assert_eq!(gens.len() as u128, invariant_count(&a));
        for e in &gens {
            let s: u64 = e.exps().iter().zip(a.alpha()).map(|(&x, &w)| x as u64 * w as u64).sum();
            assert_eq!(s % a.d() as u64, 0);
        }
        for i in 0..a.nvars() {
            let mut pure = vec![0u16; a.nvars()];
            pure[i] = a.d() as u16;
            assert!(
                gens.iter().any(|e| e.exps() == pure.as_slice()),
                "x_{i}^d missing for {a:?}"
            );
        }
    }
}

#[test]
fn standard_generators_are_the_permanent_support() {
    for n in 3..=12 {
        let gens: Vec<_> = invariant_monomials(&GroupAction::standard(n).unwrap())
            .iter()
            .map(multiset_of)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        assert_eq!(gens, per_support(n), "N = {n}");
    }
}

#[test]
fn witness_product_is_the_determinant() {
    for a in actions_up_to(4, 8) {
        if a.alpha().windows(2).any(|w| w[0] >= w[1]) {
            continue;
        }
        let w = wlp_kernel_witness(&a).unwrap();
        let det = det_expand_general(a.d(), a.alpha()).unwrap();
        assert_eq!(det.to_poly().unwrap(), w.product, "{a:?}");
    }
}

#[test]
fn witness_implies_non_injective() {
    for a in actions_up_to(4, 7) {
        wlp_kernel_witness(&a).unwrap();
        let r = wlp_rank(&a).unwrap();
        assert!(!r.injective, "{a:?}");
        assert!(r.rank < r.source_dim);
        let n = a.nvars() as u64;
        let d = a.d() as u64;
        let source = binomial(n + d - 2, n - 1).unwrap();
        let target = &binomial(n + d - 1, n - 1).unwrap() - &BigScalar::from(invariant_count(&a));
        assert_eq!(BigScalar::from(r.source_dim), source);
        assert_eq!(BigScalar::from(r.target_dim), target);
    }
}

#[test]
fn certified_rank_matches_bareiss() {
    // Force the modular route on matrices small enough to cross-check.
    for a in [
        GroupAction::standard(5).unwrap(),
        GroupAction::standard(6).unwrap(),
        GroupAction::new(7, &[0, 1, 3, 4]).unwrap(),
        GroupAction::new(8, &[0, 1, 2, 5]).unwrap(),
    ] {
        let (m, _) = multiplication_matrix(&a);
        let exact = rank::rank_bareiss(&m).unwrap();
        assert_eq!(rank::rank_mod_prime(&m, rank::MERSENNE_61), exact, "{a:?}");
        assert_eq!(wlp_rank(&a).unwrap().rank, exact, "{a:?}");
    }
}

#[test]
fn togliatti_cubic() {
    let r = minimality_check(&GroupAction::new(3, &[0, 1, 2]).unwrap()).unwrap();
    let gens: Vec<Vec<u16>> = r.generators.iter().map(|m| m.as_slice().to_vec()).collect();
    assert_eq!(gens, vec![vec![0, 0, 0], vec![0, 1, 2], vec![1, 1, 1], vec![2, 2, 2]]);
    assert_eq!((r.rank, r.source_dim, r.target_dim), (5, 6, 6));
    assert!(r.minimal && r.bound_satisfied && r.wlp_witness_verified && !r.injective);
}

#[test]
fn minimality_matches_count_equality() {
    for n in 3..=9 {
        let r = minimality_check(&GroupAction::standard(n).unwrap()).unwrap();
        let c = compare_dp(n, DEFAULT_TERM_BUDGET).unwrap();
        assert_eq!(r.minimal, c.equal, "N = {n}");
        assert_eq!(r.minimal, is_prime_power(n as u64).is_some());
        assert_eq!(BigScalar::from(r.mu), c.p);
    }
}

#[test]
fn six_variable_system_misses_the_zero_list() {
    let r = minimality_check(&GroupAction::standard(6).unwrap()).unwrap();
    let missing: BTreeSet<Vec<u16>> = r.missing_monomials.iter().map(|m| m.as_slice().to_vec()).collect();
    let expected: BTreeSet<Vec<u16>> = zero_list_6_corrected().into_iter().collect();
    assert_eq!(missing, expected);
}

#[test]
fn prime_power_degree_systems_are_minimal() {
    for d in [3usize, 4, 5, 7, 8, 9] {
        for n in 3..=d.min(6) {
            let alpha: Vec<u32> = (0..n as u32).collect();
            let r = minimality_check(&GroupAction::new(d, &alpha).unwrap()).unwrap();
            assert!(r.minimal, "d = {d}, N = {n}: missing {:?}", r.missing_monomials);
        }
    }
}

#[test]
fn bound_and_count_inequality() {
    for n in 3..=20 {
        let t = togliatti_bound_check(&GroupAction::standard(n).unwrap()).unwrap();
        assert!(t.ok, "N = {n}");
        assert_eq!(t.count_inequality, Some(true));
    }
}

#[test]
fn scans_are_ordered_and_consistent() {
    let rows = theorem49_scan(8, DEFAULT_TERM_BUDGET).unwrap();
    assert_eq!(
        rows.iter().map(|r| r.n).collect::<Vec<_>>(),
        (3..=8).collect::<Vec<_>>()
    );
    assert!(rows.iter().all(|r| r.consistent));
    let rows = conjecture_scan(6, DEFAULT_TERM_BUDGET).unwrap();
    let keys: Vec<_> = rows.iter().map(|r| (r.d, r.n, r.m)).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert!(keys.contains(&(6, 1, 5)));
}

#[test]
fn report_round_trips_through_json() {
    let r = minimality_check(&GroupAction::new(5, &[0, 1, 2]).unwrap()).unwrap();
    let s = serde_json::to_string(&r).unwrap();
    let back: GTReport = serde_json::from_str(&s).unwrap();
    assert_eq!(back, r);
}
