use std::fmt;

use super::intpoly::{cyclotomic_poly, div_rem_monic_slice, IntPolynomial};
use super::{ntheory, BigScalar};
use crate::error::{Error, Result};

/// Element of `Z[x]/(x^N - 1)`, written in the basis `1, ζ, …, ζ^(N-1)` where
/// `ζ` is the class of `x`.
///
/// Equality is equality of coordinate vectors, which is finer than equality
/// of the complex numbers they map to: `1 + ζ + ζ²` is a nonzero vector for
/// `N = 3` even though it evaluates to 0. [`CycloElem::to_integer`] performs
/// the reduction modulo `Phi_N`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloElem {
    coeffs: Box<[BigScalar]>,
}

impl CycloElem {
    pub fn zero(order: usize) -> Self {
        assert!(order > 0, "cyclotomic order must be positive");
        CycloElem {
            coeffs: vec![BigScalar::from(0); order].into_boxed_slice(),
        }
    }

    pub fn one(order: usize) -> Self {
        Self::root_power(order, 0)
    }

    /// `ζ^k`
    pub fn root_power(order: usize, k: usize) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[k % order] = BigScalar::from(1);
        z
    }

    pub fn constant(order: usize, c: BigScalar) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = c;
        z
    }

    pub fn from_coeffs(coeffs: Vec<BigScalar>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain("cyclotomic order must be positive".into()));
        }
        Ok(CycloElem {
            coeffs: coeffs.into_boxed_slice(),
        })
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(coeffs.iter().map(|&c| BigScalar::from(c)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigScalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(BigScalar::is_zero)
    }

    /// `Some(k)` if this element is exactly `ζ^k`.
    pub fn unit_root_exponent(&self) -> Option<usize> {
        let mut found = None;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !c.is_one() || found.is_some() {
                return None;
            }
            found = Some(k);
        }
        found
    }

    fn check_order(&self, rhs: &CycloElem) -> Result<()> {
        if self.order() != rhs.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: rhs.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &CycloElem) -> Result<CycloElem> {
        self.check_order(rhs)?;
        let mut out = self.clone();
        out.add_assign(rhs);
        Ok(out)
    }

    pub fn sub(&self, rhs: &CycloElem) -> Result<CycloElem> {
        self.check_order(rhs)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a -= b;
        }
        Ok(out)
    }

    pub fn neg(&self) -> CycloElem {
        CycloElem {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Cyclic convolution of coordinate vectors.
    pub fn mul(&self, rhs: &CycloElem) -> Result<CycloElem> {
        self.check_order(rhs)?;
        let mut out = CycloElem::zero(self.order());
        out.add_assign_product(self, rhs);
        Ok(out)
    }

    /// `self += a * b`. Orders must agree.
    pub(crate) fn add_assign_product(&mut self, a: &CycloElem, b: &CycloElem) {
        let n = self.order();
        debug_assert!(a.order() == n && b.order() == n);
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let k = (i + j) % n;
                if x.is_one() {
                    self.coeffs[k] += y;
                } else {
                    self.coeffs[k] += &(x * y);
                }
            }
        }
    }

    /// `self += rhs`. Orders must agree.
    pub(crate) fn add_assign(&mut self, rhs: &CycloElem) {
        debug_assert_eq!(self.order(), rhs.order());
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }

    /// `self += ζ^k * src`. Orders must agree.
    pub(crate) fn add_assign_rotated(&mut self, src: &CycloElem, k: usize) {
        let n = self.order();
        debug_assert_eq!(n, src.order());
        for (i, c) in src.coeffs.iter().enumerate() {
            if !c.is_zero() {
                self.coeffs[(i + k) % n] += c;
            }
        }
    }

    /// Multiplication by `ζ^k`.
    pub fn rotate(&self, k: usize) -> CycloElem {
        let mut out = CycloElem::zero(self.order());
        out.add_assign_rotated(self, k);
        out
    }

    /// The automorphism `ζ ↦ ζ^t`; `t` must be a unit modulo the order.
    pub fn galois(&self, t: usize) -> Result<CycloElem> {
        let n = self.order();
        if ntheory::gcd(t as u64, n as u64) != 1 {
            return Err(Error::Domain(format!("{t} is not a unit modulo {n}")));
        }
        let mut out = CycloElem::zero(n);
        for (i, c) in self.coeffs.iter().enumerate() {
            out.coeffs[(i * t) % n] = c.clone();
        }
        Ok(out)
    }

    /// Complex conjugation, `ζ ↦ ζ^(-1)`.
    pub fn conj(&self) -> CycloElem {
        let n = self.order();
        let mut out = CycloElem::zero(n);
        for (i, c) in self.coeffs.iter().enumerate() {
            out.coeffs[(n - i) % n] = c.clone();
        }
        out
    }

    pub fn scale(&self, s: &BigScalar) -> CycloElem {
        CycloElem {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Coordinate-wise exact division; `None` if some coordinate is not divisible.
    pub fn div_exact_scalar(&self, s: &BigScalar) -> Option<CycloElem> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.div_exact(s))
            .collect::<Option<Box<[_]>>>()?;
        Some(CycloElem { coeffs })
    }

    /// Remainder of the representative polynomial modulo `phi`.
    pub fn reduce_mod(&self, phi: &IntPolynomial) -> IntPolynomial {
        let (_, r) = div_rem_monic_slice(&self.coeffs, phi.coeffs());
        IntPolynomial::new(r)
    }

    /// The rational integer this element equals, when it is one.
    pub fn to_integer(&self) -> Result<BigScalar> {
        self.to_integer_with(&cyclotomic_poly(self.order()))
    }

    /// As [`CycloElem::to_integer`], with `Phi_N` supplied by the caller.
    pub fn to_integer_with(&self, phi: &IntPolynomial) -> Result<BigScalar> {
        let r = self.reduce_mod(phi);
        match r.degree() {
            None => Ok(BigScalar::from(0)),
            Some(0) => Ok(r.coeffs()[0].clone()),
            Some(_) => Err(Error::NotRational { at: None }),
        }
    }
}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloElem[{}]({self})", self.order())
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("ζ")?,
                (1, false) => write!(f, "{mag}ζ")?,
                (_, true) => write!(f, "ζ^{k}")?,
                (_, false) => write!(f, "{mag}ζ^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
