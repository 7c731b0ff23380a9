use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use super::action::GroupAction;
use super::rank::{rank_bareiss, rank_dense, rank_mod_prime, RankMethod, SparseColumns, MERSENNE_61, PRIME_62};
use crate::circulant::eigenform_product;
use crate::error::{Error, Result};
use crate::exactnum::{cyclotomic_poly, BigScalar, CycloElem};
use crate::mpoly::{for_each_congruent_monomial, mul_linear_form, reduce_coefficients, ExponentVector, SparsePoly};
use crate::DEFAULT_TERM_BUDGET;

/// Matrices with at most this many entries are ranked by Bareiss elimination.
pub const BAREISS_CELL_LIMIT: usize = 40_000;

/// `F = Π_{j=1}^{d-1} (Σ_i ζ^{jα_i} x_i)` together with the integer
/// polynomial `ℓ·F`, `ℓ = Σ_i x_i`.
#[derive(Clone, Debug)]
pub struct KernelWitness {
    pub f: SparsePoly<CycloElem>,
    pub product: SparsePoly<BigScalar>,
}

pub fn wlp_kernel_witness(action: &GroupAction) -> Result<KernelWitness> {
    wlp_kernel_witness_with_budget(action, DEFAULT_TERM_BUDGET)
}

/// Builds `F` and checks that every monomial of `ℓ·F` is invariant, so `F`
/// lies in the kernel of `×ℓ : [R/I]_{d-1} → [R/I]_d`.
pub fn wlp_kernel_witness_with_budget(action: &GroupAction, budget: u64) -> Result<KernelWitness> {
    let d = action.d();
    let f = eigenform_product(d, action.alpha(), 1..d, budget)?;
    let ell = vec![CycloElem::one(d); action.nvars()];
    let lf = mul_linear_form(&f, &ell)?;
    let product = reduce_coefficients(&lf).map_err(|e| Error::WitnessFailure(format!("ℓ·F is not rational: {e}")))?;
    if product.is_zero() {
        return Err(Error::WitnessFailure("ℓ·F vanishes".into()));
    }
    if let Some((e, c)) = product.iter().find(|(e, _)| !action.is_invariant(e.exps())) {
        return Err(Error::WitnessFailure(format!(
            "ℓ·F has the non-invariant term {c}·x^{:?}",
            e.exps()
        )));
    }
    Ok(KernelWitness { f, product })
}

impl KernelWitness {
    /// Rational coordinates of `F` in the basis `1, ζ, …, ζ^{φ(d)-1}`: each
    /// component is an integer polynomial, and each nonzero one is a kernel
    /// vector of `×ℓ` in its own right.
    pub fn rational_components(&self) -> Vec<SparsePoly<BigScalar>> {
        let Some((_, c)) = self.f.iter().next() else {
            return Vec::new();
        };
        let d = c.order();
        let phi = cyclotomic_poly(d);
        let width = phi.degree().unwrap_or(0);
        let nvars = self.f.nvars();
        let deg = self.f.degree();
        let mut parts: Vec<Vec<(ExponentVector, BigScalar)>> = vec![Vec::new(); width.max(1)];
        for (e, c) in self.f.iter() {
            let r = c.reduce_mod(&phi);
            for (k, v) in r.coeffs().iter().enumerate() {
                if !v.is_zero() {
                    parts[k].push((e.clone(), v.clone()));
                }
            }
        }
        parts
            .into_iter()
            .map(|terms| SparsePoly::from_terms(nvars, deg, terms).expect("components keep degree"))
            .filter(|p| !p.is_zero())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WlpRank {
    pub rank: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub injective: bool,
    pub method: RankMethod,
}

/// The matrix of `×(x_0 + … + x_{N-1})` from all monomials of degree `d-1`
/// to the non-invariant monomials of degree `d`, both in decreasing
/// graded-lex order, with the source basis.
pub fn multiplication_matrix(action: &GroupAction) -> (SparseColumns, Vec<ExponentVector>) {
    let n = action.nvars();
    let d = action.d();
    let ones = vec![0u64; n];
    let mut source = Vec::new();
    for_each_congruent_monomial(n, d - 1, &ones, 1, |e| source.push(ExponentVector::new(e.to_vec())));
    let mut target: FxHashMap<ExponentVector, u32> = FxHashMap::default();
    for_each_congruent_monomial(n, d, &ones, 1, |e| {
        if !action.is_invariant(e) {
            let next = target.len() as u32;
            target.insert(ExponentVector::new(e.to_vec()), next);
        }
    });
    let mut m = SparseColumns::new(target.len());
    let mut key = vec![0u16; n];
    for u in &source {
        key.copy_from_slice(u.exps());
        let mut col = Vec::with_capacity(n);
        for i in 0..n {
            key[i] += 1;
            if let Some(&row) = target.get(&key[..]) {
                col.push((row, 1));
            }
            key[i] -= 1;
        }
        m.cols.push(col);
    }
    (m, source)
}

pub fn wlp_rank(action: &GroupAction) -> Result<WlpRank> {
    wlp_rank_with(action, None)
}

/// Rank of `×ℓ` in degree `d-1`, exactly over the rationals.
///
/// Large matrices are ranked modulo primes; the resulting lower bound `r` is
/// accepted only when the rational components of `witness` span a kernel of
/// dimension `source_dim - r`, which pins the rational rank to `r`.
pub fn wlp_rank_with(action: &GroupAction, witness: Option<&KernelWitness>) -> Result<WlpRank> {
    let (m, source) = multiplication_matrix(action);
    let source_dim = m.ncols();
    let target_dim = m.nrows;
    let done = |rank: usize, method| WlpRank {
        rank,
        source_dim,
        target_dim,
        injective: rank == source_dim,
        method,
    };
    if m.nrows * m.ncols() <= BAREISS_CELL_LIMIT {
        return Ok(done(rank_bareiss(&m)?, RankMethod::Bareiss));
    }

    let owned;
    let witness = match witness {
        Some(w) => w,
        None => {
            owned = wlp_kernel_witness(action)?;
            &owned
        }
    };
    let kernel_dim = certified_kernel_dim(&m, &source, witness)?;
    let mut rank = 0;
    for p in [MERSENNE_61, PRIME_62] {
        rank = rank.max(rank_mod_prime(&m, p));
        if rank + kernel_dim == source_dim {
            return Ok(done(rank, RankMethod::CertifiedModular));
        }
        if rank + kernel_dim > source_dim {
            return Err(Error::Internal(format!(
                "modular rank {rank} and kernel dimension {kernel_dim} exceed {source_dim} columns"
            )));
        }
    }
    Err(Error::Internal(format!(
        "rank not certified: modular rank {rank}, verified kernel dimension {kernel_dim}, {source_dim} columns"
    )))
}

/// Dimension of the span of the witness components, after checking exactly
/// that each one is annihilated by the matrix.
fn certified_kernel_dim(m: &SparseColumns, source: &[ExponentVector], witness: &KernelWitness) -> Result<usize> {
    let index: FxHashMap<&[u16], usize> = source.iter().enumerate().map(|(i, e)| (e.exps(), i)).collect();
    let mut vectors = Vec::new();
    for comp in witness.rational_components() {
        let mut v = vec![BigScalar::default(); source.len()];
        for (e, c) in comp.iter() {
            let &i = index
                .get(e.exps())
                .ok_or_else(|| Error::Internal(format!("witness monomial {:?} outside the source basis", e.exps())))?;
            v[i] = c.clone();
        }
        if m.apply(&v)?.iter().any(|x| !x.is_zero()) {
            return Err(Error::WitnessFailure(
                "a rational component of F is not in the kernel".into(),
            ));
        }
        vectors.push(v);
    }
    rank_dense(vectors)
}
