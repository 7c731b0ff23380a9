use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exactnum::BigScalar;
use crate::mpoly::{exponent_of, multiset_of, MultisetIndex, SparsePoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExpansionKind {
    Det,
    Per,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub multiset: MultisetIndex,
    pub coeff: BigScalar,
}

/// Exact expansion of a circulant determinant or permanent.
///
/// `n` is the number of variables and `d` the size of the matrix (equal to
/// `n` for the generic circulant). `alpha[i]` is the first-row position of
/// `x_i`. Terms are sorted by multiset, which is decreasing graded-lex order
/// on exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionReport {
    pub kind: ExpansionKind,
    pub n: usize,
    pub d: usize,
    pub alpha: Vec<u32>,
    pub count: usize,
    pub terms: Vec<Term>,
}

impl ExpansionReport {
    pub fn from_poly(kind: ExpansionKind, alpha: Vec<u32>, poly: &SparsePoly<BigScalar>) -> Self {
        let mut terms: Vec<Term> = poly
            .iter()
            .map(|(e, c)| Term {
                multiset: multiset_of(e),
                coeff: c.clone(),
            })
            .collect();
        terms.sort_unstable_by(|a, b| a.multiset.cmp(&b.multiset));
        ExpansionReport {
            kind,
            n: poly.nvars(),
            d: poly.degree(),
            alpha,
            count: terms.len(),
            terms,
        }
    }

    /// Coefficient of a monomial, zero when absent.
    pub fn coefficient(&self, m: &MultisetIndex) -> BigScalar {
        self.terms
            .binary_search_by(|t| t.multiset.cmp(m))
            .map(|i| self.terms[i].coeff.clone())
            .unwrap_or_default()
    }

    pub fn support(&self) -> impl Iterator<Item = &MultisetIndex> {
        self.terms.iter().map(|t| &t.multiset)
    }

    /// Value at the all-ones point.
    pub fn coefficient_sum(&self) -> BigScalar {
        self.terms.iter().map(|t| &t.coeff).sum()
    }

    pub fn to_poly(&self) -> Result<SparsePoly<BigScalar>> {
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((exponent_of(&t.multiset, self.n)?, t.coeff.clone())))
            .collect::<Result<Vec<_>>>()?;
        SparsePoly::from_terms(self.n, self.d, terms)
    }
}
