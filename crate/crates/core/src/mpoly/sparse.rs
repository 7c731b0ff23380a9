use rustc_hash::FxHashMap;

use super::monomial::ExponentVector;
use crate::error::{Error, Result};
use crate::exactnum::{cyclotomic_poly, BigScalar, CycloElem};

/// Coefficient ring operations needed by [`SparsePoly`].
pub trait Coefficient: Clone {
    fn is_zero(&self) -> bool;
    fn accumulate(&mut self, rhs: &Self);
}

impl Coefficient for BigScalar {
    fn is_zero(&self) -> bool {
        BigScalar::is_zero(self)
    }
    fn accumulate(&mut self, rhs: &Self) {
        *self += rhs;
    }
}

impl Coefficient for CycloElem {
    // Only the all-zero vector counts; hidden zeros survive until reduction.
    fn is_zero(&self) -> bool {
        CycloElem::is_zero(self)
    }
    fn accumulate(&mut self, rhs: &Self) {
        self.add_assign(rhs);
    }
}

/// Homogeneous polynomial stored as a map from exponent vectors to nonzero
/// coefficients.
#[derive(Clone, Debug)]
pub struct SparsePoly<C> {
    nvars: usize,
    degree: usize,
    terms: FxHashMap<ExponentVector, C>,
}

impl<C: Coefficient> SparsePoly<C> {
    pub fn zero(nvars: usize, degree: usize) -> Self {
        SparsePoly {
            nvars,
            degree,
            terms: FxHashMap::default(),
        }
    }

    /// Degree-zero polynomial with the given constant term.
    pub fn constant(nvars: usize, c: C) -> Self {
        let mut p = Self::zero(nvars, 0);
        if !c.is_zero() {
            p.terms.insert(ExponentVector::zero(nvars), c);
        }
        p
    }

    /// Builds a polynomial, summing repeated exponents and dropping zeros.
    pub fn from_terms<I>(nvars: usize, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, C)>,
    {
        let mut p = Self::zero(nvars, degree);
        for (e, c) in terms {
            if e.nvars() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    got: e.nvars(),
                });
            }
            if e.degree() != degree {
                return Err(Error::InvalidInput(format!(
                    "term {e:?} has degree {}, expected {degree}",
                    e.degree()
                )));
            }
            p.add_term(e, &c);
        }
        p.prune();
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, e: ExponentVector, c: &C) {
        match self.terms.get_mut(e.exps()) {
            Some(slot) => slot.accumulate(c),
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    pub(crate) fn prune(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn get(&self, exps: &[u16]) -> Option<&C> {
        self.terms.get(exps)
    }

    /// Terms in unspecified order.
    pub fn iter(&self) -> impl Iterator<Item = (&ExponentVector, &C)> {
        self.terms.iter()
    }

    /// Terms in decreasing graded-lex order (`x_0^d` first).
    pub fn sorted_terms(&self) -> Vec<(&ExponentVector, &C)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_unstable_by(|a, b| b.0.cmp(a.0));
        v
    }

    pub fn add(&self, rhs: &SparsePoly<C>) -> Result<SparsePoly<C>> {
        if self.nvars != rhs.nvars || (self.degree != rhs.degree && !self.is_zero() && !rhs.is_zero()) {
            return Err(Error::DimensionMismatch {
                expected: self.degree,
                got: rhs.degree,
            });
        }
        let mut out = self.clone();
        if out.is_zero() {
            out.degree = rhs.degree;
        }
        for (e, c) in rhs.iter() {
            out.add_term(e.clone(), c);
        }
        out.prune();
        Ok(out)
    }

    pub fn try_map<D: Coefficient, F>(&self, mut f: F) -> Result<SparsePoly<D>>
    where
        F: FnMut(&ExponentVector, &C) -> Result<D>,
    {
        let mut terms = FxHashMap::default();
        terms.reserve(self.terms.len());
        for (e, c) in self.terms.iter() {
            let d = f(e, c)?;
            if !d.is_zero() {
                terms.insert(e.clone(), d);
            }
        }
        Ok(SparsePoly {
            nvars: self.nvars,
            degree: self.degree,
            terms,
        })
    }
}

impl<C: Coefficient + PartialEq> PartialEq for SparsePoly<C> {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.degree == other.degree && self.terms == other.terms
    }
}

enum LinearCoeff {
    Zero,
    Root(usize),
    General,
}

/// `p * (Σ_i coeffs[i] x_i)`.
///
/// Coefficients that are exactly a power of `ζ` are applied as coordinate
/// rotations; anything else goes through a full cyclic convolution.
pub fn mul_linear_form(p: &SparsePoly<CycloElem>, coeffs: &[CycloElem]) -> Result<SparsePoly<CycloElem>> {
    let n = p.nvars;
    if coeffs.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: coeffs.len(),
        });
    }
    let order = match coeffs.first() {
        Some(c) => c.order(),
        None => return Ok(SparsePoly::zero(0, p.degree + 1)),
    };
    for c in coeffs {
        if c.order() != order {
            return Err(Error::OrderMismatch {
                left: order,
                right: c.order(),
            });
        }
    }
    if let Some((_, c)) = p.terms.iter().next() {
        if c.order() != order {
            return Err(Error::OrderMismatch {
                left: c.order(),
                right: order,
            });
        }
    }

    let kinds: Vec<LinearCoeff> = coeffs
        .iter()
        .map(|c| {
            if c.is_zero() {
                LinearCoeff::Zero
            } else if let Some(k) = c.unit_root_exponent() {
                LinearCoeff::Root(k)
            } else {
                LinearCoeff::General
            }
        })
        .collect();

    let mut out: FxHashMap<ExponentVector, CycloElem> = FxHashMap::default();
    out.reserve(p.terms.len() * 2);
    let mut key = vec![0u16; n];
    for (e, c) in p.terms.iter() {
        key.copy_from_slice(e.exps());
        for (i, kind) in kinds.iter().enumerate() {
            if matches!(kind, LinearCoeff::Zero) {
                continue;
            }
            key[i] += 1;
            if !out.contains_key(&key[..]) {
                out.insert(ExponentVector::new(key.clone()), CycloElem::zero(order));
            }
            let slot = out.get_mut(&key[..]).expect("inserted above");
            match kind {
                LinearCoeff::Root(k) => slot.add_assign_rotated(c, *k),
                LinearCoeff::General => slot.add_assign_product(c, &coeffs[i]),
                LinearCoeff::Zero => unreachable!(),
            }
            key[i] -= 1;
        }
    }
    out.retain(|_, c| !c.is_zero());
    Ok(SparsePoly {
        nvars: n,
        degree: p.degree + 1,
        terms: out,
    })
}

/// Replaces every cyclotomic coefficient by the rational integer it equals,
/// dropping terms that reduce to zero.
pub fn reduce_coefficients(p: &SparsePoly<CycloElem>) -> Result<SparsePoly<BigScalar>> {
    let order = match p.terms.values().next() {
        Some(c) => c.order(),
        None => return Ok(SparsePoly::zero(p.nvars, p.degree)),
    };
    let phi = cyclotomic_poly(order);
    p.try_map(|e, c| {
        if c.order() != order {
            return Err(Error::OrderMismatch {
                left: order,
                right: c.order(),
            });
        }
        c.to_integer_with(&phi).map_err(|err| match err {
            Error::NotRational { .. } => Error::NotRational {
                at: Some(e.exps().to_vec()),
            },
            other => other,
        })
    })
}
