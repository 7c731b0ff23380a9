use std::borrow::Borrow;
use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Per-variable exponents `M_0, …, M_{N-1}` of a monomial.
///
/// Ordered by graded lexicographic order with `x_0 > x_1 > …`: higher total
/// degree is greater, and among equal degrees the vector with the larger
/// leading exponent is greater.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector(Box<[u16]>);

impl ExponentVector {
    pub fn new(exps: Vec<u16>) -> Self {
        ExponentVector(exps.into_boxed_slice())
    }

    pub fn zero(nvars: usize) -> Self {
        ExponentVector(vec![0; nvars].into_boxed_slice())
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn exps(&self) -> &[u16] {
        &self.0
    }

    /// `self * x_var`
    pub fn times_var(&self, var: usize) -> Self {
        let mut e = self.0.clone();
        e[var] += 1;
        ExponentVector(e)
    }

    /// `Σ w_i M_i mod m`
    pub fn weight_mod(&self, weights: &[u64], modulus: u64) -> u64 {
        self.0.iter().zip(weights).fold(0u64, |acc, (&e, &w)| {
            (acc + (e as u64 % modulus) * (w % modulus)) % modulus
        })
    }
}

impl Borrow<[u16]> for ExponentVector {
    fn borrow(&self) -> &[u16] {
        &self.0
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Sorted list `a_0 ≤ a_1 ≤ …` of the variable indices of a monomial, one
/// entry per unit of degree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultisetIndex(Vec<u16>);

impl MultisetIndex {
    /// Sorts the given indices.
    pub fn new(mut indices: Vec<u16>) -> Self {
        indices.sort_unstable();
        MultisetIndex(indices)
    }

    pub fn as_slice(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn index_sum(&self) -> u64 {
        self.0.iter().map(|&a| a as u64).sum()
    }

    /// Number of entries equal to `index`.
    pub fn multiplicity(&self, index: u16) -> usize {
        self.0.iter().filter(|&&a| a == index).count()
    }
}

impl fmt::Debug for MultisetIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl From<Vec<u16>> for MultisetIndex {
    fn from(v: Vec<u16>) -> Self {
        MultisetIndex::new(v)
    }
}

pub fn multiset_of(v: &ExponentVector) -> MultisetIndex {
    let mut out = Vec::with_capacity(v.degree());
    for (i, &e) in v.exps().iter().enumerate() {
        out.extend(std::iter::repeat_n(i as u16, e as usize));
    }
    MultisetIndex(out)
}

pub fn exponent_of(m: &MultisetIndex, nvars: usize) -> Result<ExponentVector> {
    let mut exps = vec![0u16; nvars];
    for &a in m.as_slice() {
        let slot = exps.get_mut(a as usize).ok_or(Error::IndexOutOfRange {
            index: a as usize,
            nvars,
        })?;
        *slot += 1;
    }
    Ok(ExponentVector::new(exps))
}

/// Visits every exponent vector of `nvars` variables with total degree
/// `degree` and `Σ weights_i M_i ≡ 0 (mod modulus)`, in decreasing graded
/// lexicographic order.
///
/// Branches that cannot reach an admissible vector are pruned, so the work is
/// proportional to the number of solutions times `nvars`.
pub fn for_each_congruent_monomial<F: FnMut(&[u16])>(
    nvars: usize,
    degree: usize,
    weights: &[u64],
    modulus: u64,
    mut visit: F,
) {
    assert_eq!(weights.len(), nvars);
    assert!(modulus > 0);
    if nvars == 0 {
        if degree == 0 {
            visit(&[]);
        }
        return;
    }
    let table = Reachability::new(degree, weights, modulus);
    let mut exps = vec![0u16; nvars];
    descend(&table, 0, degree, 0, &mut exps, &mut visit);
}

/// Number of exponent vectors visited by [`for_each_congruent_monomial`],
/// computed by dynamic programming without enumerating them.
pub fn count_congruent_monomials(nvars: usize, degree: usize, weights: &[u64], modulus: u64) -> u128 {
    assert_eq!(weights.len(), nvars);
    let m = modulus as usize;
    // ways[r][s]: assignments of the suffix variables with total r and weight s
    let mut ways = vec![vec![0u128; m]; degree + 1];
    ways[0][0] = 1;
    for &w in weights.iter().rev() {
        let w = (w % modulus) as usize;
        let mut next = vec![vec![0u128; m]; degree + 1];
        for r in 0..=degree {
            for e in 0..=r {
                let shift = (e * w) % m;
                for s in 0..m {
                    let prev = ways[r - e][s];
                    if prev != 0 {
                        next[r][(s + shift) % m] += prev;
                    }
                }
            }
        }
        ways = next;
    }
    ways[degree][0]
}

struct Reachability {
    weights: Vec<u64>,
    modulus: u64,
    /// ok[k][r * m + s]: variables k.. can have total r and weight ≡ s
    ok: Vec<Vec<bool>>,
}

impl Reachability {
    fn new(degree: usize, weights: &[u64], modulus: u64) -> Self {
        let n = weights.len();
        let m = modulus as usize;
        let mut ok = vec![vec![false; (degree + 1) * m]; n + 1];
        ok[n][0] = true;
        for k in (0..n).rev() {
            let w = (weights[k] % modulus) as usize;
            for r in 0..=degree {
                for e in 0..=r {
                    let shift = (e * w) % m;
                    for s in 0..m {
                        if ok[k + 1][(r - e) * m + s] {
                            ok[k][r * m + (s + shift) % m] = true;
                        }
                    }
                }
            }
        }
        Reachability {
            weights: weights.iter().map(|w| w % modulus).collect(),
            modulus,
            ok,
        }
    }

    fn reachable(&self, k: usize, remaining: usize, need: u64) -> bool {
        self.ok[k][remaining * self.modulus as usize + need as usize]
    }
}

fn descend<F: FnMut(&[u16])>(t: &Reachability, k: usize, remaining: usize, acc: u64, exps: &mut [u16], visit: &mut F) {
    let m = t.modulus;
    let need = (m - acc % m) % m;
    if !t.reachable(k, remaining, need) {
        return;
    }
    if k + 1 == exps.len() {
        exps[k] = remaining as u16;
        visit(exps);
        exps[k] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        exps[k] = e as u16;
        let acc2 = (acc + e as u64 * t.weights[k]) % m;
        descend(t, k + 1, remaining - e, acc2, exps, visit);
    }
    exps[k] = 0;
}
