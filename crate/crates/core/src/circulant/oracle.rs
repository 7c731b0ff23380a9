//! Single-coefficient evaluation without the full expansion.
//!
//! The coefficient of `Π x_i^{M_i}` in `Π_j L_j`, `L_j = Σ_i ζ^{jα_i} x_i`,
//! is the permanent of the `d×d` matrix whose column block `i` repeats the
//! vector `(ζ^{jα_i})_j` `M_i` times, divided by `Π M_i!`. The permanent is
//! taken by Ryser's formula with column subsets grouped by how many columns
//! of each block they contain:
//!
//! `per = Σ_s (-1)^{d - Σs} Π_i C(M_i, s_i) Π_j (Σ_i s_i ζ^{jα_i})`.
//!
//! Everything is computed in `Z[ζ]/(ζ^d - 1)` with `i128` coordinates, where
//! the division by `Π M_i!` is exact coordinatewise, and only the quotient is
//! reduced to an integer.

use super::expand::validate_positions;
use crate::error::{Error, Result};
use crate::exactnum::{BigScalar, CycloElem};
use crate::mpoly::MultisetIndex;

/// Largest matrix size the oracle accepts.
pub const ORACLE_LIMIT: usize = 16;

/// Coefficient of the monomial `m` in `det(Circ(x_0, …, x_{N-1}))`.
pub fn coefficient_oracle(n: usize, m: &MultisetIndex) -> Result<BigScalar> {
    if n == 0 {
        return Err(Error::Domain("coefficient_oracle requires N >= 1".into()));
    }
    let alpha: Vec<u32> = (0..n as u32).collect();
    oracle_impl(n, &alpha, m)
}

/// Coefficient of the monomial `m` in `det(A^d_α)`.
pub fn coefficient_oracle_general(d: usize, alpha: &[u32], m: &MultisetIndex) -> Result<BigScalar> {
    validate_positions(d, alpha)?;
    let residues: Vec<u32> = alpha.iter().map(|&a| a % d as u32).collect();
    oracle_impl(d, &residues, m)
}

fn oracle_impl(d: usize, alpha: &[u32], m: &MultisetIndex) -> Result<BigScalar> {
    if d > ORACLE_LIMIT {
        return Err(Error::TooLarge {
            n: d,
            limit: ORACLE_LIMIT,
            what: "coefficient oracle",
        });
    }
    if m.degree() != d {
        return Err(Error::InvalidInput(format!(
            "multiset {:?} has degree {}, expected {d}",
            m.as_slice(),
            m.degree()
        )));
    }
    let nvars = alpha.len();
    if let Some(&i) = m.as_slice().iter().find(|&&i| i as usize >= nvars) {
        return Err(Error::IndexOutOfRange {
            index: i as usize,
            nvars,
        });
    }

    // Variables that occur, with their multiplicity and root exponent step.
    let blocks: Vec<(u32, usize)> = (0..nvars)
        .filter_map(|i| {
            let mult = m.multiplicity(i as u16);
            (mult > 0).then_some((mult as u32, alpha[i] as usize))
        })
        .collect();

    let binom: Vec<Vec<i128>> = blocks.iter().map(|&(mult, _)| binomial_row(mult)).collect();
    let mut s = vec![0u32; blocks.len()];
    let mut total = vec![0i128; d];
    let mut acc = vec![0i128; d];
    let mut next = vec![0i128; d];
    let mut form = vec![0i64; d];

    loop {
        let size: u32 = s.iter().sum();
        if size > 0 {
            acc.fill(0);
            acc[0] = 1;
            for j in 0..d {
                form.fill(0);
                for (&(_, a), &si) in blocks.iter().zip(&s) {
                    form[(j * a) % d] += si as i64;
                }
                cyclic_mul_into(&acc, &form, &mut next)?;
                std::mem::swap(&mut acc, &mut next);
            }
            let mut weight: i128 = s.iter().zip(&binom).map(|(&si, row)| row[si as usize]).product();
            if (d as u32 - size) % 2 == 1 {
                weight = -weight;
            }
            for (t, &a) in total.iter_mut().zip(&acc) {
                *t = a
                    .checked_mul(weight)
                    .and_then(|v| t.checked_add(v))
                    .ok_or_else(overflow)?;
            }
        }
        if !advance(&mut s, &blocks) {
            break;
        }
    }

    let denom: i128 = blocks.iter().map(|&(mult, _)| factorial(mult)).product();
    let mut quotient = Vec::with_capacity(d);
    for &t in &total {
        if t % denom != 0 {
            return Err(Error::InexactDivision(format!(
                "Ryser sum coordinate {t} is not divisible by {denom} for {:?}",
                m.as_slice()
            )));
        }
        quotient.push(BigScalar::from(t / denom));
    }
    CycloElem::from_coeffs(quotient)?.to_integer()
}

fn overflow() -> Error {
    Error::Internal("coefficient oracle overflowed 128-bit accumulation".into())
}

/// Mixed-radix increment of `s` with digit `i` in `0..=M_i`.
fn advance(s: &mut [u32], blocks: &[(u32, usize)]) -> bool {
    for (digit, &(mult, _)) in s.iter_mut().zip(blocks) {
        if *digit < mult {
            *digit += 1;
            return true;
        }
        *digit = 0;
    }
    false
}

/// `out = a * b` in `Z[x]/(x^d - 1)`, with `b` sparse.
fn cyclic_mul_into(a: &[i128], b: &[i64], out: &mut [i128]) -> Result<()> {
    let d = a.len();
    out.fill(0);
    for (k, &bk) in b.iter().enumerate() {
        if bk == 0 {
            continue;
        }
        let bk = bk as i128;
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            let slot = &mut out[(i + k) % d];
            *slot = ai
                .checked_mul(bk)
                .and_then(|v| slot.checked_add(v))
                .ok_or_else(overflow)?;
        }
    }
    Ok(())
}

fn binomial_row(n: u32) -> Vec<i128> {
    let mut row = vec![1i128; n as usize + 1];
    for k in 1..=n as usize {
        row[k] = row[k - 1] * (n as usize + 1 - k) as i128 / k as i128;
    }
    row
}

fn factorial(n: u32) -> i128 {
    (1..=n as i128).product()
}
