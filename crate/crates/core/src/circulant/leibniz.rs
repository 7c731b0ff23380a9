//! Permutation-sum expansions of the generic circulant.

use rustc_hash::FxHashMap;

use super::report::{ExpansionKind, ExpansionReport};
use crate::error::{Error, Result};
use crate::exactnum::BigScalar;
use crate::mpoly::{ExponentVector, SparsePoly};

pub const PERMANENT_LIMIT: usize = 10;
pub const BRUTE_FORCE_LIMIT: usize = 8;

/// Sums `sign(σ)^signed · Π_i a_{i,σ(i)}` over all permutations, with
/// `a_{i,j} = x_{(j - i) mod n}`. Permutations are generated by Heap's
/// algorithm, one transposition per step, so the sign alternates.
fn permutation_sum(n: usize, signed: bool) -> SparsePoly<BigScalar> {
    let var = |i: usize, j: usize| (j + n - i) % n;
    let mut perm: Vec<usize> = (0..n).collect();
    let mut exps = vec![0u16; n];
    exps[0] = n as u16;
    let mut sign: i64 = 1;
    let mut acc: FxHashMap<Box<[u16]>, i64> = FxHashMap::default();

    let mut record = |exps: &[u16], sign: i64| {
        let s = if signed { sign } else { 1 };
        match acc.get_mut(exps) {
            Some(v) => *v += s,
            None => {
                acc.insert(exps.into(), s);
            }
        }
    };
    record(&exps, sign);

    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            let (a, b) = if i % 2 == 0 { (0, i) } else { (c[i], i) };
            exps[var(a, perm[a])] -= 1;
            exps[var(b, perm[b])] -= 1;
            perm.swap(a, b);
            exps[var(a, perm[a])] += 1;
            exps[var(b, perm[b])] += 1;
            sign = -sign;
            record(&exps, sign);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }

    let terms = acc
        .into_iter()
        .map(|(e, v)| (ExponentVector::new(e.into_vec()), BigScalar::from(v)));
    SparsePoly::from_terms(n, n, terms).expect("every permutation term has degree n")
}

/// Permanent of `Circ(x_0, …, x_{N-1})` by enumerating all `N!` permutations.
pub fn per_expand(n: usize) -> Result<ExpansionReport> {
    if n == 0 {
        return Err(Error::Domain("per_expand requires N >= 1".into()));
    }
    if n > PERMANENT_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: PERMANENT_LIMIT,
            what: "permanent enumeration",
        });
    }
    let p = permutation_sum(n, false);
    Ok(ExpansionReport::from_poly(
        ExpansionKind::Per,
        (0..n as u32).collect(),
        &p,
    ))
}

/// Determinant of `Circ(x_0, …, x_{N-1})` by the signed permutation sum.
/// Shares no code with the eigenvalue-product expansion.
pub fn det_brute_force(n: usize) -> Result<ExpansionReport> {
    if n == 0 {
        return Err(Error::Domain("det_brute_force requires N >= 1".into()));
    }
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: BRUTE_FORCE_LIMIT,
            what: "signed permutation enumeration",
        });
    }
    let p = permutation_sum(n, true);
    Ok(ExpansionReport::from_poly(
        ExpansionKind::Det,
        (0..n as u32).collect(),
        &p,
    ))
}
