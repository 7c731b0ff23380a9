//! A sufficient condition for a determinant coefficient to vanish, and the
//! explicit vanishing monomial that exists for every `N` that is not a prime
//! power.

use serde::{Deserialize, Serialize};

use super::support::support_congruence_check;
use crate::error::{Error, Result};
use crate::exactnum::ntheory::{bezout, gcd, is_prime_power};
use crate::mpoly::MultisetIndex;

/// Checks whether `m = 0^{M_0} 1^{M_1} a b c` for some split with
/// `M_0, M_1 ≥ 1`, `N = M_0 + M_1 + 3`, `M_1 + a + b + c ≡ 0 (mod N)`,
/// `N | (M_1+1)(M_1+2)`, and one of
///
/// * `a ≤ b < N - M_1`, `a + b = N + 1 - K_1`, `c = M_0 + 2 + K_1`,
/// * `N - M_1 ≤ b ≤ a`, `b + c = N + 1 + K_0`, `a = M_0 + 2 - K_0`,
///
/// with `K_1 = (M_1+2)(M_1+1)/N` and `K_0 = (M_0+2)(M_0+1)/N`.
///
/// The second alternative is checked as written. It never holds: it forces
/// `a ≥ N - M_1 = M_0 + 3` and `a ≤ M_0 + 2` at once.
pub fn vanishing_predicate(n: usize, m: &MultisetIndex) -> bool {
    let s = m.as_slice();
    if n < 5 || s.len() != n {
        return false;
    }
    let (a, b, c) = (s[n - 3] as i64, s[n - 2] as i64, s[n - 1] as i64);
    let big_n = n as i64;
    (1..=n - 4).any(|m0| {
        let m1 = n - 3 - m0;
        if s[..m0].iter().any(|&v| v != 0) || s[m0..m0 + m1].iter().any(|&v| v != 1) {
            return false;
        }
        let (m0, m1) = (m0 as i64, m1 as i64);
        if (m1 + a + b + c) % big_n != 0 {
            return false;
        }
        let p1 = (m1 + 2) * (m1 + 1);
        if p1 % big_n != 0 {
            return false;
        }
        let k1 = p1 / big_n;
        let first = a <= b && b < big_n - m1 && a + b == big_n + 1 - k1 && c == m0 + 2 + k1;
        let p0 = (m0 + 2) * (m0 + 1);
        let second = p0 % big_n == 0 && {
            let k0 = p0 / big_n;
            big_n - m1 <= b && b <= a && b + c == big_n + 1 + k0 && a == m0 + 2 - k0
        };
        first || second
    })
}

/// Parameters of the vanishing monomial attached to a coprime split `N = n·m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessParams {
    #[serde(rename = "N")]
    pub big_n: u64,
    pub n: u64,
    pub m: u64,
    pub lambda: u64,
    pub mu: u64,
    pub m0: u64,
    pub m1: u64,
    pub a1: u64,
    pub a2: u64,
    pub a3: u64,
}

impl WitnessParams {
    /// Derives every parameter from the split, with `λ` the least positive
    /// solution of `λm ≡ 1 (mod n)`.
    pub fn from_split(n: u64, m: u64) -> Result<WitnessParams> {
        if !(1 < n && n < m && gcd(n, m) == 1) {
            return Err(Error::InvalidInput(format!(
                "({n}, {m}) is not a coprime split with 1 < n < m"
            )));
        }
        let (_, s, _) = bezout(m as i64, n as i64);
        let lambda = s.rem_euclid(n as i64) as u64;
        let mu = (lambda * m - 1) / n;
        let big_n = n * m;
        let m1 = mu * n - 1;
        let p = WitnessParams {
            big_n,
            n,
            m,
            lambda,
            mu,
            m0: big_n - mu * n - 2,
            m1,
            a1: mu * n - mu * lambda + 1,
            a2: big_n - mu * n,
            a3: big_n - mu * n + lambda * mu,
        };
        p.check()?;
        Ok(p)
    }

    fn check(&self) -> Result<()> {
        let fail = |what: &str| {
            Err(Error::Internal(format!(
                "witness invariant violated: {what} for {self:?}"
            )))
        };
        if self.big_n != self.n * self.m || !(1 < self.n && self.n < self.m) || gcd(self.n, self.m) != 1 {
            return fail("N = n·m with 1 < n < m coprime");
        }
        if self.lambda < 1 || self.mu < 1 || self.lambda * self.m > self.big_n {
            return fail("1 ≤ λ, μ and λm ≤ N");
        }
        if self.lambda * self.m != 1 + self.mu * self.n {
            return fail("λm = 1 + μn");
        }
        if !((self.m1 + 1) * (self.m1 + 2)).is_multiple_of(self.big_n) {
            return fail("N | (M_1+1)(M_1+2)");
        }
        if self.m0 < 1 || self.m1 < 1 || self.m0 + self.m1 + 3 != self.big_n {
            return fail("M_0, M_1 ≥ 1 and N = M_0 + M_1 + 3");
        }
        if !(1 < self.a1 && self.a1 <= self.a2 && self.a2 < self.a3 && self.a3 < self.big_n) {
            return fail("1 < A_1 ≤ A_2 < A_3 < N");
        }
        Ok(())
    }

    /// `0^{M_0} 1^{M_1} A_1 A_2 A_3`.
    pub fn multiset(&self) -> MultisetIndex {
        let mut v = vec![0u16; self.m0 as usize];
        v.extend(std::iter::repeat_n(1u16, self.m1 as usize));
        v.extend([self.a1 as u16, self.a2 as u16, self.a3 as u16]);
        MultisetIndex::new(v)
    }
}

/// The coprime split `N = n·m` with the least `n > 1` such that
/// `gcd(n, m) = 1` and `n < m`.
pub fn coprime_split(big_n: u64) -> Option<(u64, u64)> {
    (2..big_n)
        .take_while(|&n| n * n < big_n)
        .find(|&n| big_n.is_multiple_of(n) && gcd(n, big_n / n) == 1)
        .map(|n| (n, big_n / n))
}

/// Monomial with zero determinant coefficient that still lies in the
/// permanent's support, for `N` not a prime power.
///
/// The algebraic conditions are checked here. Confirming that the
/// coefficient is zero is left to [`coefficient_oracle`](super::coefficient_oracle).
pub fn theorem_witness(big_n: u64) -> Result<(WitnessParams, MultisetIndex)> {
    if big_n == 0 || big_n > u16::MAX as u64 {
        return Err(Error::Domain(format!("N = {big_n} is outside 1..=65535")));
    }
    let (n, m) = coprime_split(big_n).ok_or(Error::PrimePowerInput { n: big_n })?;
    debug_assert!(big_n == 1 || is_prime_power(big_n).is_none());
    let params = WitnessParams::from_split(n, m)?;
    let ms = params.multiset();
    let nn = big_n as usize;
    if ms.degree() != nn || !in_permanent_support(nn, &ms) {
        return Err(Error::Internal(format!(
            "witness {:?} is not in the permanent support",
            ms.as_slice()
        )));
    }
    if !support_congruence_check(nn, &ms) {
        return Err(Error::Internal(format!(
            "witness {:?} fails the index-sum congruence",
            ms.as_slice()
        )));
    }
    if !vanishing_predicate(nn, &ms) {
        return Err(Error::Internal(format!(
            "witness {:?} fails the vanishing predicate",
            ms.as_slice()
        )));
    }
    Ok((params, ms))
}

/// `Σ_i (i+1)·M_i ≡ 0 (mod N)` on multiplicities, with total degree `N`.
pub fn in_permanent_support(n: usize, m: &MultisetIndex) -> bool {
    if n == 0 || m.degree() != n || m.as_slice().iter().any(|&i| i as usize >= n) {
        return false;
    }
    let weighted: u64 = m.as_slice().iter().map(|&i| i as u64 + 1).sum();
    weighted.is_multiple_of(n as u64)
}
