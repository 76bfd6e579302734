//! Exact integers and rationals, plus the handful of number-theoretic
//! primitives (gcd, floor/fractional part, sign, binomials, modular inverses)
//! that every sum family consumes.
//!
//! [`Rational`] keeps values with 64-bit numerator and denominator in an
//! inline representation and computes on them with 128-bit intermediates;
//! anything larger is promoted to a heap-allocated [`BigRational`]. The
//! representation is canonical (a value is inline whenever it fits), so
//! derived equality and hashing are structural.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{ensure, Error, Result};

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;

/// An exact fraction, always reduced, with a strictly positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// `den >= 1`, `gcd(|num|, den) == 1`.
    Small { num: i64, den: i64 },
    /// Only used when the numerator or denominator does not fit in `i64`.
    Big(BigRational),
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    if a <= u64::MAX as u128 && b <= u64::MAX as u128 {
        return gcd_u64(a as u64, b as u64) as u128;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

impl Rational {
    pub const ZERO: Rational = Rational(Repr::Small { num: 0, den: 1 });
    pub const ONE: Rational = Rational(Repr::Small { num: 1, den: 1 });

    /// `num / den`, reduced. Fails when `den == 0`.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        ensure(den != 0, "Rational::new", "den ≠ 0")?;
        Ok(Self::from_i128(num as i128, den as i128))
    }

    /// Builds `num / den` from arbitrary-precision parts. Fails when `den == 0`.
    pub fn from_integers(num: Integer, den: Integer) -> Result<Self> {
        ensure(!den.is_zero(), "Rational::from_integers", "den ≠ 0")?;
        Ok(Self::from_big(BigRational::new(num, den)))
    }

    /// `num / den` for a nonzero denominator; callers guarantee `den != 0`.
    pub(crate) fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        let g = gcd_u128(num.unsigned_abs(), den.unsigned_abs());
        let (mut n, mut d) = if g > 1 {
            // g divides both, and the quotients are no larger in magnitude.
            (num / g as i128, den / g as i128)
        } else {
            (num, den)
        };
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(num), Ok(den)) => Rational(Repr::Small { num, den }),
            _ => Rational(Repr::Big(BigRational::new_raw(n.into(), d.into()))),
        }
    }

    fn from_big(value: BigRational) -> Self {
        // BigRational keeps itself reduced with a positive denominator.
        match (value.numer().to_i64(), value.denom().to_i64()) {
            (Some(num), Some(den)) => Rational(Repr::Small { num, den }),
            _ => Rational(Repr::Big(value)),
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small { num, den } => BigRational::new_raw((*num).into(), (*den).into()),
            Repr::Big(b) => b.clone(),
        }
    }

    pub fn numer(&self) -> Integer {
        match &self.0 {
            Repr::Small { num, .. } => (*num).into(),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> Integer {
        match &self.0 {
            Repr::Small { den, .. } => (*den).into(),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small { num: 0, .. })
    }

    /// δ_ℤ: true iff the value is an integer.
    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small { den, .. } => *den == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i64 {
        match &self.0 {
            Repr::Small { num, .. } => num.signum(),
            Repr::Big(b) => {
                if b.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn abs(&self) -> Rational {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Rational {
        match &self.0 {
            Repr::Small { num, den } => {
                assert!(*num != 0, "reciprocal of zero");
                Self::from_i128(*den as i128, *num as i128)
            }
            Repr::Big(b) => Self::from_big(b.recip()),
        }
    }

    /// Integer power; negative exponents invert first. Panics on `0^-k`.
    pub fn pow(&self, exp: i32) -> Rational {
        let base = if exp < 0 { self.recip() } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Rational::ONE;
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    /// Greatest integer `≤ self`, as a rational.
    pub fn floor(&self) -> Rational {
        match &self.0 {
            Repr::Small { num, den } => Rational::from(num.div_euclid(*den)),
            Repr::Big(b) => Self::from_big(b.floor()),
        }
    }

    /// Fractional part `{x} = x - [x]`, always in `[0, 1)`.
    pub fn fract(&self) -> Rational {
        match &self.0 {
            Repr::Small { num, den } => Rational(Repr::Small {
                num: num.rem_euclid(*den),
                den: *den,
            }),
            Repr::Big(b) => Self::from_big(b - b.floor()),
        }
    }

    /// The value as an `i64` when it is an integer in range.
    pub fn to_i64(&self) -> Option<i64> {
        match &self.0 {
            Repr::Small { num, den: 1 } => Some(*num),
            _ => None,
        }
    }

    /// Nearest `f64` (a single rounding for inline values below 2^53).
    pub fn to_f64(&self) -> f64 {
        const EXACT: i64 = 1 << 53;
        match &self.0 {
            Repr::Small { num, den } if num.abs() <= EXACT && *den <= EXACT => *num as f64 / *den as f64,
            _ => self.to_big().to_f64().unwrap_or(f64::NAN),
        }
    }

    fn binary(
        lhs: &Rational,
        rhs: &Rational,
        small: impl FnOnce(i128, i128, i128, i128) -> Rational,
        big: impl FnOnce(BigRational, BigRational) -> BigRational,
    ) -> Rational {
        match (&lhs.0, &rhs.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                small(*a as i128, *b as i128, *c as i128, *d as i128)
            }
            _ => Self::from_big(big(lhs.to_big(), rhs.to_big())),
        }
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::ZERO
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational(Repr::Small { num: v, den: 1 })
    }
}

impl From<i32> for Rational {
    fn from(v: i32) -> Self {
        Rational::from(v as i64)
    }
}

impl From<Integer> for Rational {
    fn from(v: Integer) -> Self {
        Self::from_big(BigRational::from_integer(v))
    }
}

impl From<&Integer> for Rational {
    fn from(v: &Integer) -> Self {
        Self::from(v.clone())
    }
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn add(self, rhs: &'a Rational) -> Rational {
        Rational::binary(
            self,
            rhs,
            |a, b, c, d| {
                if b == d {
                    Rational::from_i128(a + c, b)
                } else {
                    Rational::from_i128(a * d + c * b, b * d)
                }
            },
            |x, y| x + y,
        )
    }
}

impl<'a> Sub<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn sub(self, rhs: &'a Rational) -> Rational {
        Rational::binary(
            self,
            rhs,
            |a, b, c, d| {
                if b == d {
                    Rational::from_i128(a - c, b)
                } else {
                    Rational::from_i128(a * d - c * b, b * d)
                }
            },
            |x, y| x - y,
        )
    }
}

impl<'a> Mul<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn mul(self, rhs: &'a Rational) -> Rational {
        Rational::binary(self, rhs, |a, b, c, d| Rational::from_i128(a * c, b * d), |x, y| x * y)
    }
}

impl<'a> Div<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn div(self, rhs: &'a Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational::binary(self, rhs, |a, b, c, d| Rational::from_i128(a * d, b * c), |x, y| x / y)
    }
}

macro_rules! forward_binop {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$method(&rhs)
            }
        }
        impl $trait<i64> for Rational {
            type Output = Rational;
            fn $method(self, rhs: i64) -> Rational {
                (&self).$method(&Rational::from(rhs))
            }
        }
        impl<'a> $trait<i64> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: i64) -> Rational {
                self.$method(&Rational::from(rhs))
            }
        }
    )*};
}

forward_binop!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        *self = &*self + rhs;
    }
}

impl AddAssign<Rational> for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        *self = &*self - rhs;
    }
}

impl SubAssign<Rational> for Rational {
    fn sub_assign(&mut self, rhs: Rational) {
        *self = &*self - &rhs;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        *self = &*self * rhs;
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match &self.0 {
            Repr::Small { num, den } => Rational::from_i128(-(*num as i128), *den as i128),
            Repr::Big(b) => Rational::from_big(-b),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::ZERO, |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::ZERO, |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::ONE, |acc, x| acc * x)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small { num, den: 1 } => write!(f, "{num}"),
            Repr::Small { num, den } => write!(f, "{num}/{den}"),
            Repr::Big(b) if b.is_integer() => write!(f, "{}", b.numer()),
            Repr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Literal grammar: optional `-`, decimal digits, optionally `/` and a
/// positive decimal denominator. No `+`, whitespace or decimal point.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseRational(s.to_string());
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (num_str, den_str) = match body.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (body, None),
        };
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|c| c.is_ascii_digit());
        if !digits(num_str) || !den_str.is_none_or(digits) {
            return Err(bad());
        }
        let mut num: BigInt = num_str.parse().map_err(|_| bad())?;
        if negative {
            num = -num;
        }
        let den: BigInt = match den_str {
            Some(d) => d.parse().map_err(|_| bad())?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(bad());
        }
        Rational::from_integers(num, den)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Positive greatest common divisor of `|a|` and `|b|`; `gcd_pos(a, 0) = |a|`.
pub fn gcd_pos(a: i64, b: i64) -> Result<i64> {
    ensure(a != 0 || b != 0, "gcd_pos", "a and b not both zero")?;
    let g = gcd_u64(a.unsigned_abs(), b.unsigned_abs());
    i64::try_from(g).map_err(|_| Error::Domain {
        op: "gcd_pos",
        requirement: "result representable as i64",
    })
}

/// `([x], {x})` with `0 ≤ {x} < 1` and `x = [x] + {x}`.
pub fn floor_frac(x: &Rational) -> (Integer, Rational) {
    let floor = x.floor();
    let frac = x - &floor;
    (floor.numer(), frac)
}

/// Sign of a rational: -1, 0 or 1.
pub fn sgn(x: &Rational) -> i64 {
    x.signum()
}

/// δ_ℤ(x).
pub fn is_integer(x: &Rational) -> bool {
    x.is_integer()
}

/// `C(n, k)` for `n ≥ 0`, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> Result<Integer> {
    ensure(n >= 0, "binomial", "n ≥ 0")?;
    if k < 0 || k > n {
        return Ok(Integer::zero());
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    Ok(acc)
}

/// The representative `a'` in `[0, m)` with `a·a' ≡ 1 (mod m)`.
pub fn mod_inverse(a: i64, m: i64) -> Result<i64> {
    ensure(m >= 1, "mod_inverse", "m ≥ 1")?;
    let m128 = m as i128;
    let (mut old_r, mut r) = ((a as i128).rem_euclid(m128), m128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    // old_r = gcd(a mod m, m); gcd(0, 1) = 1 covers the m = 1 case.
    if old_r != 1 {
        return Err(Error::NoInverse { a, modulus: m });
    }
    Ok(old_s.rem_euclid(m128) as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd_pos(12, -18).unwrap(), 6);
        assert_eq!(gcd_pos(7, 1).unwrap(), 1);
        assert_eq!(gcd_pos(0, -5).unwrap(), 5);
        assert!(matches!(gcd_pos(0, 0), Err(Error::Domain { .. })));
    }

    #[test]
    fn floor_frac_examples() {
        assert_eq!(floor_frac(&q("-7/3")), (Integer::from(-3), q("2/3")));
        assert_eq!(floor_frac(&q("5")), (Integer::from(5), Rational::ZERO));
        assert_eq!(floor_frac(&q("1/2")), (Integer::from(0), q("1/2")));
    }

    #[test]
    fn sign_and_integrality() {
        assert_eq!(sgn(&q("-3/7")), -1);
        assert_eq!(sgn(&Rational::ZERO), 0);
        assert_eq!(sgn(&q("9")), 1);
        let two = q("4/2");
        assert!(is_integer(&two));
        assert_eq!(two.to_string(), "2");
        assert!(!is_integer(&q("1/2")));
        assert!(is_integer(&q("-6")));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(5, 2).unwrap(), Integer::from(10));
        assert_eq!(binomial(4, -1).unwrap(), Integer::zero());
        assert_eq!(binomial(0, 0).unwrap(), Integer::one());
        assert!(binomial(-1, 0).is_err());
        assert_eq!(binomial(100, 50).unwrap().to_string(), "100891344545564193334812497256");
    }

    #[test]
    fn pascal_rule() {
        for n in 1..=64 {
            for k in 0..=n {
                assert_eq!(
                    binomial(n, k).unwrap(),
                    binomial(n - 1, k - 1).unwrap() + binomial(n - 1, k).unwrap()
                );
            }
        }
    }

    #[test]
    fn mod_inverse_examples() {
        assert_eq!(mod_inverse(3, 7).unwrap(), 5);
        assert_eq!(mod_inverse(1, 1).unwrap(), 0);
        assert_eq!(mod_inverse(4, 6), Err(Error::NoInverse { a: 4, modulus: 6 }));
        assert_eq!(mod_inverse(-3, 7).unwrap(), 2);
        assert!(mod_inverse(3, 0).is_err());
    }

    #[test]
    fn literal_grammar() {
        assert_eq!(q("-7/3").to_string(), "-7/3");
        assert_eq!(q("12/2").to_string(), "6");
        assert_eq!(q("-0/5").to_string(), "0");
        assert_eq!(q("-0").to_string(), "0");
        for bad in ["", "-", "+1", "1/0", "1/", "/2", "1.5", " 1", "1/-2", "--1", "a"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn promotes_and_demotes() {
        let big = Rational::from(i64::MAX) * Rational::from(i64::MAX);
        assert_eq!(big.to_string(), "85070591730234615847396907784232501249");
        let back = &big / &Rational::from(i64::MAX);
        assert_eq!(back, Rational::from(i64::MAX));
        assert!(matches!(back.0, Repr::Small { .. }));
        let tiny = Rational::new(1, i64::MAX).unwrap().pow(3);
        assert_eq!(tiny.pow(-1) * tiny.clone(), Rational::ONE);
        assert_eq!(Rational::from(i64::MIN).abs().to_string(), "9223372036854775808");
        assert_eq!(-(-Rational::from(i64::MIN)), Rational::from(i64::MIN));
    }

    #[test]
    fn ordering_and_float() {
        assert!(q("1/3") < q("1/2"));
        assert!(q("-1/2") < q("-1/3"));
        assert_eq!(q("-1/4").to_f64(), -0.25);
        let huge = Rational::from(i64::MAX).pow(4);
        assert!(huge > Rational::from(i64::MAX));
        assert!((huge.to_f64() / 9.223372036854776e18f64.powi(4) - 1.0).abs() < 1e-15);
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-1000i64..1000, 1i64..1000).prop_map(|(n, d)| Rational::new(n, d).unwrap())
    }

    fn wide_rational() -> impl Strategy<Value = Rational> {
        (any::<i64>(), 1i64..i64::MAX).prop_map(|(n, d)| Rational::new(n, d).unwrap())
    }

    proptest! {
        #[test]
        fn fract_is_one_periodic(x in small_rational(), k in -50i64..50) {
            let shifted = &x + &Rational::from(k);
            prop_assert_eq!(floor_frac(&shifted).1, floor_frac(&x).1);
            let (fl, fr) = floor_frac(&x);
            prop_assert!(fr >= Rational::ZERO && fr < Rational::ONE);
            prop_assert_eq!(Rational::from(fl) + fr, x);
        }

        #[test]
        fn addition_clears_denominators(a in any::<i64>(), b in 1i64..i64::MAX,
                                         c in any::<i64>(), d in 1i64..i64::MAX) {
            let lhs = (Rational::new(a, b).unwrap() + Rational::new(c, d).unwrap())
                * Rational::from(BigInt::from(b) * BigInt::from(d));
            prop_assert_eq!(lhs, Rational::from(BigInt::from(a) * d + BigInt::from(c) * b));
        }

        #[test]
        fn reduced_and_canonical(x in wide_rational(), y in wide_rational()) {
            for v in [&x + &y, &x - &y, &x * &y] {
                let (n, d) = (v.numer(), v.denom());
                prop_assert!(d.is_positive());
                prop_assert!(num_integer::Integer::gcd(&n, &d).is_one());
                prop_assert_eq!(v.clone(), Rational::from_integers(n, d).unwrap());
                prop_assert_eq!(v.to_string().parse::<Rational>().unwrap(), v);
            }
        }

        #[test]
        fn gcd_is_greatest_common_divisor(a in -300i64..300, b in -300i64..300) {
            prop_assume!(a != 0 || b != 0);
            let g = gcd_pos(a, b).unwrap();
            prop_assert!(g > 0 && a % g == 0 && b % g == 0);
            for d in 1..=300i64 {
                if a % d == 0 && b % d == 0 {
                    prop_assert_eq!(g % d, 0);
                }
            }
        }

        #[test]
        fn inverse_is_inverse(a in -500i64..500, m in 1i64..500) {
            match mod_inverse(a, m) {
                Ok(inv) => {
                    prop_assert!((0..m).contains(&inv));
                    prop_assert_eq!((a as i128 * inv as i128).rem_euclid(m as i128), 1 % m as i128);
                }
                Err(_) => prop_assert!(gcd_pos(a, m).unwrap() != 1),
            }
        }
    }
}
