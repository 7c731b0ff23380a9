use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

/// Exact integer with an inline machine-word representation that promotes to
/// a heap-allocated big integer on overflow.
///
/// Values that fit in an `i64` are always stored inline, so equality and
/// hashing can work on the representation directly.
#[derive(Clone)]
pub struct BigScalar(Repr);

#[derive(Clone)]
enum Repr {
    Small(i64),
    Large(Box<BigInt>),
}

impl BigScalar {
    pub const fn from_i64(v: i64) -> Self {
        BigScalar(Repr::Small(v))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        match v.to_i64() {
            Some(s) => BigScalar(Repr::Small(s)),
            None => BigScalar(Repr::Large(Box::new(v))),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match &self.0 {
            Repr::Small(v) => BigInt::from(*v),
            Repr::Large(b) => (**b).clone(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match &self.0 {
            Repr::Small(v) => Some(*v),
            Repr::Large(_) => None,
        }
    }

    pub fn to_u64(&self) -> Option<u64> {
        match &self.0 {
            Repr::Small(v) => u64::try_from(*v).ok(),
            Repr::Large(b) => b.to_u64(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Small(v) => *v as f64,
            Repr::Large(b) => b.to_f64().unwrap_or(f64::NAN),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1))
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(v) => *v < 0,
            Repr::Large(b) => b.is_negative(),
        }
    }

    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small(v) => v.signum() as i32,
            Repr::Large(b) => {
                if b.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn abs(&self) -> BigScalar {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// `self / divisor` if the division leaves no remainder.
    pub fn div_exact(&self, divisor: &BigScalar) -> Option<BigScalar> {
        if divisor.is_zero() {
            return None;
        }
        if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &divisor.0) {
            if let (Some(q), Some(r)) = (a.checked_div(*b), a.checked_rem(*b)) {
                return (r == 0).then_some(BigScalar::from_i64(q));
            }
        }
        let (q, r) = self.to_bigint().div_rem(&divisor.to_bigint());
        r.is_zero().then(|| BigScalar::from_bigint(q))
    }

    /// Remainder with the sign of the divisor's absolute value (always in `0..|m|`).
    pub fn mod_floor(&self, m: &BigScalar) -> BigScalar {
        if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &m.0) {
            if let Some(r) = a.checked_rem_euclid(*b) {
                return BigScalar::from_i64(r);
            }
        }
        let m = m.to_bigint().abs();
        BigScalar::from_bigint(self.to_bigint().mod_floor(&m))
    }

    pub fn pow(&self, exp: u32) -> BigScalar {
        let mut acc = BigScalar::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl Default for BigScalar {
    fn default() -> Self {
        BigScalar::from_i64(0)
    }
}

macro_rules! from_prim {
    ($($t:ty),*) => {$(
        impl From<$t> for BigScalar {
            fn from(v: $t) -> Self {
                match i64::try_from(v) {
                    Ok(s) => BigScalar::from_i64(s),
                    Err(_) => BigScalar::from_bigint(BigInt::from(v)),
                }
            }
        }
    )*};
}
from_prim!(i8, i16, i32, i64, u8, u16, u32, u64, usize, i128, u128);

impl From<BigInt> for BigScalar {
    fn from(v: BigInt) -> Self {
        BigScalar::from_bigint(v)
    }
}

impl PartialEq for BigScalar {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => a == b,
            (Repr::Large(a), Repr::Large(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for BigScalar {}

impl Hash for BigScalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small(v) => {
                0u8.hash(state);
                v.hash(state);
            }
            Repr::Large(b) => {
                1u8.hash(state);
                b.hash(state);
            }
        }
    }
}

impl Ord for BigScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => a.cmp(b),
            _ => self.to_bigint().cmp(&other.to_bigint()),
        }
    }
}

impl PartialOrd for BigScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a BigScalar> for &BigScalar {
    type Output = BigScalar;
    fn add(self, rhs: &'a BigScalar) -> BigScalar {
        if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &rhs.0) {
            if let Some(s) = a.checked_add(*b) {
                return BigScalar::from_i64(s);
            }
        }
        BigScalar::from_bigint(self.to_bigint() + rhs.to_bigint())
    }
}

impl<'a> Sub<&'a BigScalar> for &BigScalar {
    type Output = BigScalar;
    fn sub(self, rhs: &'a BigScalar) -> BigScalar {
        if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &rhs.0) {
            if let Some(s) = a.checked_sub(*b) {
                return BigScalar::from_i64(s);
            }
        }
        BigScalar::from_bigint(self.to_bigint() - rhs.to_bigint())
    }
}

impl<'a> Mul<&'a BigScalar> for &BigScalar {
    type Output = BigScalar;
    fn mul(self, rhs: &'a BigScalar) -> BigScalar {
        if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &rhs.0) {
            if let Some(s) = a.checked_mul(*b) {
                return BigScalar::from_i64(s);
            }
        }
        BigScalar::from_bigint(self.to_bigint() * rhs.to_bigint())
    }
}

impl Neg for &BigScalar {
    type Output = BigScalar;
    fn neg(self) -> BigScalar {
        match &self.0 {
            Repr::Small(v) => match v.checked_neg() {
                Some(n) => BigScalar::from_i64(n),
                None => BigScalar::from_bigint(-BigInt::from(*v)),
            },
            Repr::Large(b) => BigScalar::from_bigint(-(**b).clone()),
        }
    }
}

impl Neg for BigScalar {
    type Output = BigScalar;
    fn neg(self) -> BigScalar {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<BigScalar> for BigScalar {
            type Output = BigScalar;
            fn $m(self, rhs: BigScalar) -> BigScalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a BigScalar> for BigScalar {
            type Output = BigScalar;
            fn $m(self, rhs: &'a BigScalar) -> BigScalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<BigScalar> for &BigScalar {
            type Output = BigScalar;
            fn $m(self, rhs: BigScalar) -> BigScalar {
                self.$m(&rhs)
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl<'a> AddAssign<&'a BigScalar> for BigScalar {
    fn add_assign(&mut self, rhs: &'a BigScalar) {
        if let (Repr::Small(a), Repr::Small(b)) = (&mut self.0, &rhs.0) {
            if let Some(s) = a.checked_add(*b) {
                *a = s;
                return;
            }
        }
        *self = &*self + rhs;
    }
}

impl AddAssign for BigScalar {
    fn add_assign(&mut self, rhs: BigScalar) {
        *self += &rhs;
    }
}

impl<'a> SubAssign<&'a BigScalar> for BigScalar {
    fn sub_assign(&mut self, rhs: &'a BigScalar) {
        if let (Repr::Small(a), Repr::Small(b)) = (&mut self.0, &rhs.0) {
            if let Some(s) = a.checked_sub(*b) {
                *a = s;
                return;
            }
        }
        *self = &*self - rhs;
    }
}

impl SubAssign for BigScalar {
    fn sub_assign(&mut self, rhs: BigScalar) {
        *self -= &rhs;
    }
}

impl<'a> MulAssign<&'a BigScalar> for BigScalar {
    fn mul_assign(&mut self, rhs: &'a BigScalar) {
        *self = &*self * rhs;
    }
}

impl Zero for BigScalar {
    fn zero() -> Self {
        BigScalar::from_i64(0)
    }
    fn is_zero(&self) -> bool {
        BigScalar::is_zero(self)
    }
}

impl One for BigScalar {
    fn one() -> Self {
        BigScalar::from_i64(1)
    }
}

impl Sum for BigScalar {
    fn sum<I: Iterator<Item = BigScalar>>(iter: I) -> Self {
        iter.fold(BigScalar::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl<'a> Sum<&'a BigScalar> for BigScalar {
    fn sum<I: Iterator<Item = &'a BigScalar>>(iter: I) -> Self {
        iter.fold(BigScalar::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

impl Product for BigScalar {
    fn product<I: Iterator<Item = BigScalar>>(iter: I) -> Self {
        iter.fold(BigScalar::one(), |acc, x| &acc * &x)
    }
}

impl fmt::Display for BigScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(v) => fmt::Display::fmt(v, f),
            Repr::Large(b) => fmt::Display::fmt(b, f),
        }
    }
}

impl fmt::Debug for BigScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for BigScalar {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Ok(v) = s.parse::<i64>() {
            return Ok(BigScalar::from_i64(v));
        }
        s.parse::<BigInt>().map(BigScalar::from_bigint)
    }
}

// Decimal strings on the wire so that consumers with 53-bit numbers never truncate.
impl Serialize for BigScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BigScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct Visitor;
        impl de::Visitor<'_> for Visitor {
            type Value = BigScalar;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a decimal integer string or an integer")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<BigScalar, E> {
                v.parse().map_err(E::custom)
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigScalar, E> {
                Ok(BigScalar::from(v))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigScalar, E> {
                Ok(BigScalar::from(v))
            }
        }
        deserializer.deserialize_any(Visitor)
    }
}
