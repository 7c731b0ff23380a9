//! Exact rank of sparse integer matrices.
//!
//! Small matrices go through fraction-free (Bareiss) elimination. Large ones
//! are eliminated modulo a prime, which can only undercount the rational
//! rank; callers close the gap with explicit kernel vectors.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::BigScalar;

/// Integer matrix stored column by column as `(row, value)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseColumns {
    pub nrows: usize,
    pub cols: Vec<Vec<(u32, i64)>>,
}

impl SparseColumns {
    pub fn new(nrows: usize) -> Self {
        SparseColumns {
            nrows,
            cols: Vec::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> Vec<Vec<BigScalar>> {
        let mut rows = vec![vec![BigScalar::default(); self.ncols()]; self.nrows];
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, v) in col {
                rows[i as usize][j] += &BigScalar::from(v);
            }
        }
        rows
    }

    /// `M · v`, exactly.
    pub fn apply(&self, v: &[BigScalar]) -> Result<Vec<BigScalar>> {
        if v.len() != self.ncols() {
            return Err(Error::DimensionMismatch {
                expected: self.ncols(),
                got: v.len(),
            });
        }
        let mut out = vec![BigScalar::default(); self.nrows];
        for (col, x) in self.cols.iter().zip(v) {
            if x.is_zero() {
                continue;
            }
            for &(i, a) in col {
                out[i as usize] += &(x * &BigScalar::from(a));
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RankMethod {
    /// Fraction-free elimination over the integers.
    Bareiss,
    /// Elimination modulo a prime, matched by an exact rational kernel.
    CertifiedModular,
}

/// Rank over the rationals by Bareiss elimination on a dense copy.
pub fn rank_bareiss(m: &SparseColumns) -> Result<usize> {
    let dense = m.to_dense();
    // Eliminate along the shorter side.
    let a = if m.nrows <= m.ncols() {
        dense
    } else {
        transpose(&dense, m.ncols())
    };
    rank_dense(a)
}

/// Rank over the rationals of a dense integer matrix given by rows.
pub fn rank_dense(mut a: Vec<Vec<BigScalar>>) -> Result<usize> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev = BigScalar::from(1);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = pivot_row[col].clone();
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[col]);
            for j in col + 1..ncols {
                let num = &(&pivot * &row[j]) - &(&lead * &pivot_row[j]);
                row[j] = num
                    .div_exact(&prev)
                    .ok_or_else(|| Error::InexactDivision(format!("Bareiss step at column {col}")))?;
            }
        }
        prev = pivot;
        rank += 1;
    }
    Ok(rank)
}

fn transpose(a: &[Vec<BigScalar>], ncols: usize) -> Vec<Vec<BigScalar>> {
    (0..ncols)
        .map(|j| a.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// `2^61 - 1`
pub const MERSENNE_61: u64 = (1 << 61) - 1;
/// Largest prime below `2^62`.
pub const PRIME_62: u64 = (1 << 62) - 57;

#[derive(Clone, Copy)]
struct Field {
    p: u64,
}

impl Field {
    #[inline]
    fn mul(self, a: u64, b: u64) -> u64 {
        let z = a as u128 * b as u128;
        if self.p == MERSENNE_61 {
            let r = (z as u64 & MERSENNE_61) + (z >> 61) as u64;
            if r >= MERSENNE_61 {
                r - MERSENNE_61
            } else {
                r
            }
        } else {
            (z % self.p as u128) as u64
        }
    }

    #[inline]
    fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn reduce(self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    fn inv(self, a: u64) -> u64 {
        let mut result = 1;
        let mut base = a;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }
}

/// A reduced column with leading row `lead`; `rows` and `vals` hold the
/// entries at rows `≤ lead`, the leading one normalized to 1.
struct Pivot {
    rows: Box<[u32]>,
    vals: Box<[u64]>,
}

/// Rank modulo the prime `p` (below `2^62`), by column-wise sparse elimination
/// against a dense accumulator. Never exceeds the rational rank.
pub fn rank_mod_prime(m: &SparseColumns, p: u64) -> usize {
    assert!(p > 2 && p < 1 << 62);
    let f = Field { p };
    let mut pivots: Vec<Option<Pivot>> = (0..m.nrows).map(|_| None).collect();
    let mut w = vec![0u64; m.nrows];
    let mut rank = 0;
    for col in &m.cols {
        let mut hi = 0usize;
        for &(r, v) in col {
            let r = r as usize;
            w[r] = (w[r] + f.reduce(v)) % p;
            hi = hi.max(r + 1);
        }
        let mut r = hi;
        while r > 0 {
            r -= 1;
            let x = w[r];
            if x == 0 {
                continue;
            }
            match &pivots[r] {
                Some(pv) => {
                    for (&i, &c) in pv.rows.iter().zip(pv.vals.iter()) {
                        let i = i as usize;
                        w[i] = f.sub(w[i], f.mul(x, c));
                    }
                }
                None => {
                    let inv = f.inv(x);
                    let mut rows = Vec::new();
                    let mut vals = Vec::new();
                    for (i, slot) in w[..=r].iter_mut().enumerate() {
                        if *slot != 0 {
                            rows.push(i as u32);
                            vals.push(f.mul(*slot, inv));
                            *slot = 0;
                        }
                    }
                    pivots[r] = Some(Pivot {
                        rows: rows.into_boxed_slice(),
                        vals: vals.into_boxed_slice(),
                    });
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}
