use std::fmt;

use super::{ntheory, BigScalar};
use crate::error::{Error, Result};

/// Dense univariate polynomial with integer coefficients, lowest degree first.
/// The zero polynomial has an empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigScalar>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigScalar>) -> Self {
        while coeffs.last().is_some_and(BigScalar::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigScalar::from(c)).collect())
    }

    pub fn one() -> Self {
        Self::from_i64s(&[1])
    }

    /// `x^n - 1`
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut c = vec![BigScalar::from(0); n + 1];
        c[0] = BigScalar::from(-1);
        c[n] = BigScalar::from(1);
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[BigScalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(BigScalar::is_one)
    }

    pub fn mul(&self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::new(Vec::new());
        }
        let mut out = vec![BigScalar::from(0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        IntPolynomial::new(out)
    }

    /// Quotient and remainder by a monic divisor.
    pub fn div_rem_monic(&self, divisor: &IntPolynomial) -> Result<(IntPolynomial, IntPolynomial)> {
        if !divisor.is_monic() {
            return Err(Error::Domain("divisor must be monic".into()));
        }
        let (q, r) = div_rem_monic_slice(&self.coeffs, &divisor.coeffs);
        Ok((IntPolynomial::new(q), IntPolynomial::new(r)))
    }

    /// Exact quotient; fails if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &IntPolynomial) -> Result<IntPolynomial> {
        let (q, r) = self.div_rem_monic(divisor)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision(format!("({self}) / ({divisor})")));
        }
        Ok(q)
    }
}

/// Long division of `num` by the monic `den` (both lowest degree first).
pub(crate) fn div_rem_monic_slice(num: &[BigScalar], den: &[BigScalar]) -> (Vec<BigScalar>, Vec<BigScalar>) {
    let mut rem: Vec<BigScalar> = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return (Vec::new(), rem);
    }
    let mut quo = vec![BigScalar::from(0); rem.len() - dd];
    for shift in (0..quo.len()).rev() {
        let lead = rem[shift + dd].clone();
        if lead.is_zero() {
            continue;
        }
        for (k, d) in den.iter().enumerate() {
            if !d.is_zero() {
                rem[shift + k] -= &(&lead * d);
            }
        }
        quo[shift] = lead;
    }
    rem.truncate(dd);
    (quo, rem)
}

/// The `n`-th cyclotomic polynomial, obtained by exactly dividing `x^n - 1` by
/// `Phi_k` for every proper divisor `k` of `n`.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn cyclotomic_poly(n: usize) -> IntPolynomial {
    assert!(n > 0, "cyclotomic_poly requires n >= 1");
    let mut acc = IntPolynomial::x_pow_minus_one(n);
    for k in ntheory::divisors(n as u64).expect("n >= 1") {
        let k = k as usize;
        if k == n {
            continue;
        }
        acc = acc
            .div_exact(&cyclotomic_poly(k))
            .expect("x^n - 1 is divisible by Phi_k for k | n");
    }
    acc
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}
