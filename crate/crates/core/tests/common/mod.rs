#![allow(dead_code)]

use std::collections::BTreeMap;

use circulant_core::circulant::ExpansionReport;

/// Parses a sum of monomials such as `x^4-2x^2z^2+4xzt^2` over single-letter
/// variables, returning coefficients keyed by sorted variable-index lists.
pub fn parse_display(src: &str, vars: &[char]) -> BTreeMap<Vec<u16>, i64> {
    let chars: Vec<char> = src.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out: BTreeMap<Vec<u16>, i64> = BTreeMap::new();
    let mut i = 0;
    while i < chars.len() {
        let mut sign = 1;
        if chars[i] == '+' || chars[i] == '-' {
            if chars[i] == '-' {
                sign = -1;
            }
            i += 1;
        }
        let start = i;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        let coeff: i64 = if i > start {
            chars[start..i].iter().collect::<String>().parse().unwrap()
        } else {
            1
        };
        let mut mono = Vec::new();
        while i < chars.len() && chars[i] != '+' && chars[i] != '-' {
            let var = vars
                .iter()
                .position(|&v| v == chars[i])
                .unwrap_or_else(|| panic!("unknown symbol {:?} in {src:?}", chars[i]));
            i += 1;
            let mut power = 1;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let s = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                power = chars[s..i].iter().collect::<String>().parse().unwrap();
            }
            mono.extend(std::iter::repeat_n(var as u16, power));
        }
        mono.sort_unstable();
        *out.entry(mono).or_default() += sign * coeff;
    }
    out.retain(|_, c| *c != 0);
    out
}

pub fn report_map(r: &ExpansionReport) -> BTreeMap<Vec<u16>, i64> {
    r.terms
        .iter()
        .map(|t| {
            (
                t.multiset.as_slice().to_vec(),
                t.coeff.to_i64().expect("small coefficient"),
            )
        })
        .collect()
}

/// Entries of `expected` and `actual` that differ, as `(monomial, expected, actual)`.
pub fn diff(expected: &BTreeMap<Vec<u16>, i64>, actual: &BTreeMap<Vec<u16>, i64>) -> Vec<(Vec<u16>, i64, i64)> {
    let mut keys: Vec<&Vec<u16>> = expected.keys().chain(actual.keys()).collect();
    keys.sort();
    keys.dedup();
    keys.into_iter()
        .filter_map(|k| {
            let e = expected.get(k).copied().unwrap_or(0);
            let a = actual.get(k).copied().unwrap_or(0);
            (e != a).then(|| (k.clone(), e, a))
        })
        .collect()
}

pub const VARS: [char; 5] = ['x', 'y', 'z', 't', 'u'];

pub const DET3: &str = "x^3+y^3+z^3-3xyz";
pub const PER3: &str = "x^3+y^3+z^3+3xyz";
pub const DET4: &str = "x^4-y^4+z^4-t^4-2x^2z^2+2y^2t^2-4x^2yt+4xy^2z-4yz^2t+4xzt^2";
pub const PER4: &str = "x^4+y^4+z^4+t^4+2x^2z^2+2y^2t^2+4x^2yt+4xy^2z+4yz^2t+4xzt^2";
pub const DET5: &str = "x^5+y^5+z^5+t^5+u^5-5x^3yu-5x^3zt-5xy^3z-5y^3tu -5xz^3u \
    -5yz^3t-5xyt^3-5zy^3u-5xtu^3-5yzu^3+5x^2y^2t+5x^2yz^2 +5x^2zu^2 \
    +5x^2t^2u+5xy^2u^2+5xz^2t^2+5y^2z^2u +5y^2tu^2+5yt^2u^2+5z^2tu^2-5xyztu";
pub const PER5: &str = "x^5+y^5+z^5+t^5+u^5+ 5 t u^3 x + 5 t^2 u x^2 + 5 t^2 u^2 y + 5 t^3 x y + 5 u x^3 y \
    + 5 u^2 x y^2 + 5 t x^2 y^2 + 5 t u y^3  + 5 t^3 u z + 5 u^2 x^2 z + 5 t x^3 z + 5 u^3 y z + 15 t u x y z \
    + 5 t^2 y^2 z + 5 x y^3 z + 5 t u^2 z^2 + 5 t^2 x z^2 + 5 x^2 y z^2 + 5 u y^2 z^2 + 5 u x z^3 + 5 t y z^3";

/// The two monomials of `DET5` that differ from the true expansion, as
/// `(printed, corrected)`: `zy^3u` for `zt^3u` and `y^2tu^2` for `y^2t^2z`.
/// Neither printed monomial has index sum divisible by 5.
pub const DET5_MISPRINTS: [(&[u16], &[u16]); 2] = [
    (&[1, 1, 1, 2, 4], &[2, 3, 3, 3, 4]),
    (&[1, 1, 3, 4, 4], &[1, 1, 2, 3, 3]),
];

/// Monomials of the permanent for `N = 6` with zero determinant coefficient.
pub const ZERO_LIST_6: [[u16; 6]; 12] = [
    [0, 0, 1, 3, 3, 5],
    [0, 0, 1, 2, 4, 5],
    [0, 0, 2, 3, 3, 4],
    [0, 1, 1, 2, 4, 4],
    [0, 1, 1, 2, 3, 5],
    [0, 1, 2, 2, 3, 4],
    [0, 1, 3, 4, 4, 5],
    [0, 2, 3, 4, 4, 5],
    [0, 2, 2, 4, 5, 5],
    [1, 2, 2, 3, 5, 5],
    [1, 1, 3, 4, 4, 5],
    [1, 2, 3, 3, 4, 5],
];

/// The entry of `ZERO_LIST_6` that is not a permanent monomial (index sum
/// 17), and the vanishing monomial found in its place.
pub const ZERO_LIST_6_MISPRINT: ([u16; 6], [u16; 6]) = ([0, 1, 3, 4, 4, 5], [0, 1, 3, 4, 5, 5]);

/// `ZERO_LIST_6` with the misprinted entry replaced.
pub fn zero_list_6_corrected() -> Vec<Vec<u16>> {
    ZERO_LIST_6
        .iter()
        .map(|t| {
            if *t == ZERO_LIST_6_MISPRINT.0 {
                ZERO_LIST_6_MISPRINT.1.to_vec()
            } else {
                t.to_vec()
            }
        })
        .collect()
}

pub const ZERO_10: [u16; 10] = [0, 0, 0, 0, 1, 1, 1, 3, 6, 8];

/// Numbers in `2..=limit` that are not prime powers.
pub fn non_prime_powers(limit: u64) -> Vec<u64> {
    (2..=limit)
        .filter(|&n| circulant_core::exactnum::is_prime_power(n).is_none())
        .collect()
}
