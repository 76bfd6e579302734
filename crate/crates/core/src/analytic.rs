//! Floating-point truncation checks for the convergent series behind the
//! Bernoulli functions, and exact checks of two algebraic lemmas used
//! alongside them.
//!
//! Every reference value is computed exactly as a rational (or a rational
//! times a power of π) and converted to `f64` once. Bilateral partial sums
//! are symmetric, `Σ_{|d| ≤ K}`, with `d` and `-d` paired and accumulated
//! from the largest `|d|` down with Neumaier compensation.
//!
//! Tolerances are a priori bounds on the tail of each series:
//!
//! | target | bound on the truncation error |
//! |---|---|
//! | Fourier series of `B̄_n`, `n ≥ 2` | `2 n! / ((2π)^n (n-1)) · K^{1-n}` |
//! | `Σ' (d + s)^{-j}` and its twisted form, `j ≥ 2` | `2 M^{1-j} / (j-1)` with `M = K - ⌈|s|⌉` |
//! | `j = 1`, untwisted, `s ∉ ℤ` | `8|s| / (3K)` (needs `K ≥ 2|s|`) |
//! | `j = 1`, untwisted, `s ∈ ℤ` | `2|s| / (K - |s|)` |
//! | `j = 1`, twist `e^{2πidx}` with `x ∉ ℤ` | `2 / (|sin πx| (M + 1))` |
//! | `ζ(2j)` | `K^{1-2j} / (2j-1)` |
//!
//! Each bound is padded by [`ROUNDING_SLACK`] for floating-point rounding.

use std::f64::consts::PI;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::arith::{binomial, Rational};
use crate::bernoulli::{bernoulli_function, bernoulli_number};
use crate::error::{domain, ensure, Result};
use crate::params::{int, rat, ParamList, ParamSpec, ParamValue, Reader};

/// Absolute allowance for accumulated floating-point rounding.
pub const ROUNDING_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TruncationTarget {
    /// Fourier series of `B̄_n`.
    Fourier,
    /// `Σ' (d + r/b)^{-j}` against its finite closed form.
    Lemma24,
    /// `Σ' e^{2πidx} (d + r/b)^{-j}` against its finite closed form.
    Lemma27,
    /// `ζ(2j)` against its Bernoulli-number closed form.
    ZetaEven,
}

impl TruncationTarget {
    pub const ALL: [TruncationTarget; 4] = [
        TruncationTarget::Fourier,
        TruncationTarget::Lemma24,
        TruncationTarget::Lemma27,
        TruncationTarget::ZetaEven,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            TruncationTarget::Fourier => "fourier",
            TruncationTarget::Lemma24 => "lemma24",
            TruncationTarget::Lemma27 => "lemma27",
            TruncationTarget::ZetaEven => "zeta-even",
        }
    }

    pub fn params(self) -> &'static [ParamSpec] {
        const FOURIER: &[ParamSpec] = &[int("n"), rat("x")];
        const LEMMA24: &[ParamSpec] = &[int("j"), int("b"), int("r")];
        const LEMMA27: &[ParamSpec] = &[int("j"), int("b"), int("r"), rat("x")];
        const ZETA: &[ParamSpec] = &[int("j")];
        match self {
            TruncationTarget::Fourier => FOURIER,
            TruncationTarget::Lemma24 => LEMMA24,
            TruncationTarget::Lemma27 => LEMMA27,
            TruncationTarget::ZetaEven => ZETA,
        }
    }

    /// Runs the check on values given in [`TruncationTarget::params`] order.
    pub fn run(self, values: &[ParamValue], k: u64) -> Result<TruncationReport> {
        let malformed = || domain("analytic", "parameters match the target's list");
        let order = |v: i64| u32::try_from(v).map_err(|_| domain("analytic", "order ≥ 0"));
        let mut r = Reader::new(values);
        match self {
            TruncationTarget::Fourier => {
                let (n, x) = (r.int().ok_or_else(malformed)?, r.rat().ok_or_else(malformed)?);
                r.finish(()).ok_or_else(malformed)?;
                fourier_partial(order(n)?, &x, k)
            }
            TruncationTarget::Lemma24 => {
                let j = r.int().ok_or_else(malformed)?;
                let (b, rr) = (r.int().ok_or_else(malformed)?, r.int().ok_or_else(malformed)?);
                r.finish(()).ok_or_else(malformed)?;
                lemma24_check(order(j)?, b, rr, k)
            }
            TruncationTarget::Lemma27 => {
                let j = r.int().ok_or_else(malformed)?;
                let (b, rr) = (r.int().ok_or_else(malformed)?, r.int().ok_or_else(malformed)?);
                let x = r.rat().ok_or_else(malformed)?;
                r.finish(()).ok_or_else(malformed)?;
                lemma27_check(order(j)?, b, rr, &x, k)
            }
            TruncationTarget::ZetaEven => {
                let j = r.int().ok_or_else(malformed)?;
                r.finish(()).ok_or_else(malformed)?;
                zeta_even_check(order(j)?, k)
            }
        }
    }
}

impl std::str::FromStr for TruncationTarget {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TruncationTarget::ALL
            .into_iter()
            .find(|t| t.tag() == s)
            .ok_or_else(|| format!("unknown analytic target {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

impl Complex {
    pub fn new(re: f64, im: f64) -> Self {
        Complex { re, im }
    }

    fn real(re: f64) -> Self {
        Complex { re, im: 0.0 }
    }

    fn mul(self, o: Complex) -> Complex {
        Complex::new(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)
    }

    fn scale(self, s: f64) -> Complex {
        Complex::new(self.re * s, self.im * s)
    }

    /// `e^{2πi·num/den}`, with the phase reduced exactly to `[0, 1)` first.
    fn unit(num: i128, den: i128) -> Complex {
        let t = num.rem_euclid(den) as f64 / den as f64;
        let (s, c) = (2.0 * PI * t).sin_cos();
        Complex::new(c, s)
    }

    /// `i^k`.
    fn i_pow(k: i64) -> Complex {
        match k.rem_euclid(4) {
            0 => Complex::new(1.0, 0.0),
            1 => Complex::new(0.0, 1.0),
            2 => Complex::new(-1.0, 0.0),
            _ => Complex::new(0.0, -1.0),
        }
    }
}

/// One truncated series compared against its exact reference.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TruncationReport {
    pub target: TruncationTarget,
    pub params: ParamList,
    #[serde(rename = "K")]
    pub k: u64,
    pub approx: Complex,
    pub reference: Complex,
    /// The larger of the real and imaginary discrepancies.
    pub abs_error: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl TruncationReport {
    fn new(
        target: TruncationTarget,
        params: Vec<ParamValue>,
        k: u64,
        approx: Complex,
        reference: Complex,
        tolerance: f64,
    ) -> Self {
        let names = target.params().iter().map(|s| s.name);
        let abs_error = (approx.re - reference.re).abs().max((approx.im - reference.im).abs());
        TruncationReport {
            target,
            params: ParamList(names.zip(params).collect()),
            k,
            approx,
            reference,
            abs_error,
            tolerance,
            pass: abs_error <= tolerance,
        }
    }
}

/// Neumaier's compensated summation.
#[derive(Debug, Clone, Copy, Default)]
struct Compensated {
    sum: f64,
    carry: f64,
}

impl Compensated {
    fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.carry += (self.sum - t) + v;
        } else {
            self.carry += (v - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(self) -> f64 {
        self.sum + self.carry
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct ComplexSum {
    re: Compensated,
    im: Compensated,
}

impl ComplexSum {
    fn add(&mut self, z: Complex) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    fn value(self) -> Complex {
        Complex::new(self.re.value(), self.im.value())
    }
}

fn factorial_f64(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// Splits a rational into `(numerator, denominator)` as `i128`.
fn parts(x: &Rational) -> Result<(i128, i128)> {
    let fits = || domain("analytic", "shift numerator and denominator fit in 64 bits");
    let num = x.numer().to_i64().ok_or_else(fits)?;
    let den = x.denom().to_i64().ok_or_else(fits)?;
    Ok((num.into(), den.into()))
}

/// Symmetric partial sum of the Fourier series of `B̄_n` against `B̄_n(x)`.
pub fn fourier_partial(n: u32, x: &Rational, k: u64) -> Result<TruncationReport> {
    ensure(n >= 2, "fourier_partial", "n ≥ 2")?;
    ensure(k >= 1, "fourier_partial", "K ≥ 1")?;
    let (p, q) = parts(x)?;
    let mut acc = ComplexSum::default();
    for d in (1..=k as i128).rev() {
        let phase = Complex::unit(d * p, q);
        let mirror = Complex::new(phase.re, -phase.im);
        let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
        let weight = (d as f64).powi(-(n as i32));
        acc.add(Complex::new(phase.re + sign * mirror.re, phase.im + sign * mirror.im).scale(weight));
    }
    // -n!/(2πi)^n = -n!/(2π)^n · i^{-n}
    let factor = Complex::i_pow(-(n as i64)).scale(-factorial_f64(n) / (2.0 * PI).powi(n as i32));
    let approx = acc.value().mul(factor);
    let reference = Complex::real(bernoulli_function(n, x).to_f64());
    let bound = 2.0 * factorial_f64(n) / ((2.0 * PI).powi(n as i32) * f64::from(n - 1)) * (k as f64).powi(1 - n as i32);
    Ok(TruncationReport::new(
        TruncationTarget::Fourier,
        vec![ParamValue::Int(n.into()), ParamValue::Rational(x.clone())],
        k,
        approx,
        reference,
        bound + ROUNDING_SLACK,
    ))
}

/// `(-1)^{j-1} (2πi)^j sgn(b) b^{j-1} / j! · Σ_{l=1}^{|b|} e^{2πi(l-x)r/b} B̄_j((l-x)/b)`.
fn closed_form(j: u32, b: i64, r: i64, x: &Rational) -> Result<Complex> {
    let (p, q) = parts(x)?;
    let mut acc = ComplexSum::default();
    for l in 1..=b.abs() {
        let shifted = (Rational::from(l) - x) / b;
        let phase = Complex::unit((i128::from(l) * q - p) * i128::from(r), q * i128::from(b));
        acc.add(phase.scale(bernoulli_function(j, &shifted).to_f64()));
    }
    let sign = if j % 2 == 1 { 1.0 } else { -1.0 } * b.signum() as f64;
    let magnitude = (2.0 * PI).powi(j as i32) * (b as f64).powi(j as i32 - 1) / factorial_f64(j);
    Ok(acc.value().mul(Complex::i_pow(j.into()).scale(sign * magnitude)))
}

/// Symmetric partial sum `Σ'_{|d| ≤ K} e^{2πidx} (d + r/b)^{-j}`.
fn twisted_partial(j: u32, b: i64, r: i64, x: &Rational, k: u64) -> Result<Complex> {
    let (p, q) = parts(x)?;
    let (b, r) = (i128::from(b), i128::from(r));
    // (d + r/b)^{-j} = (b / (db + r))^j
    let term = |d: i128| -> Complex {
        let den = d * b + r;
        if den == 0 {
            return Complex::default();
        }
        let weight = (b as f64 / den as f64).powi(j as i32);
        Complex::unit(d * p, q).scale(weight)
    };
    let mut acc = ComplexSum::default();
    for d in (1..=k as i128).rev() {
        let (plus, minus) = (term(d), term(-d));
        acc.add(Complex::new(plus.re + minus.re, plus.im + minus.im));
    }
    acc.add(term(0));
    Ok(acc.value())
}

/// Tail bound for the twisted sums; an integer `x` is no twist at all.
fn twisted_tolerance(j: u32, b: i64, r: i64, x: &Rational, k: u64) -> Result<f64> {
    let s = Rational::new(r, b)?;
    let ceil_s = -((-s.abs()).floor());
    let ceil_s = ceil_s
        .to_i64()
        .ok_or_else(|| domain("analytic", "|r/b| fits in 64 bits"))?;
    ensure(k as i128 > i128::from(ceil_s), "analytic", "K > ⌈|r/b|⌉")?;
    let m = (k as i64 - ceil_s) as f64;
    let abs_s = s.abs().to_f64();
    let bound = if j >= 2 {
        2.0 * m.powi(1 - j as i32) / f64::from(j - 1)
    } else if !x.is_integer() {
        let sin = (PI * x.fract().to_f64()).sin().abs();
        2.0 / (sin * (m + 1.0))
    } else if s.is_integer() {
        2.0 * abs_s / (k as f64 - abs_s)
    } else {
        ensure(k as f64 >= 2.0 * abs_s, "analytic", "K ≥ 2|r/b| when j = 1")?;
        8.0 * abs_s / (3.0 * k as f64)
    };
    Ok(bound + ROUNDING_SLACK)
}

/// `Σ'_{|d| ≤ K} (d + r/b)^{-j}` against its finite closed form.
pub fn lemma24_check(j: u32, b: i64, r: i64, k: u64) -> Result<TruncationReport> {
    ensure(j >= 1, "lemma24_check", "j ≥ 1")?;
    ensure(b != 0, "lemma24_check", "b ≠ 0")?;
    ensure(k >= 1, "lemma24_check", "K ≥ 1")?;
    let zero = Rational::ZERO;
    let tolerance = twisted_tolerance(j, b, r, &zero, k)?;
    let approx = twisted_partial(j, b, r, &zero, k)?;
    let reference = closed_form(j, b, r, &zero)?;
    Ok(TruncationReport::new(
        TruncationTarget::Lemma24,
        vec![ParamValue::Int(j.into()), ParamValue::Int(b), ParamValue::Int(r)],
        k,
        approx,
        reference,
        tolerance,
    ))
}

/// `Σ'_{|d| ≤ K} e^{2πidx} (d + r/b)^{-j}` against its finite closed form.
pub fn lemma27_check(j: u32, b: i64, r: i64, x: &Rational, k: u64) -> Result<TruncationReport> {
    ensure(j >= 1, "lemma27_check", "j ≥ 1")?;
    ensure(b != 0, "lemma27_check", "b ≠ 0")?;
    ensure(k >= 1, "lemma27_check", "K ≥ 1")?;
    let tolerance = twisted_tolerance(j, b, r, x, k)?;
    let approx = twisted_partial(j, b, r, x, k)?;
    let reference = closed_form(j, b, r, x)?;
    Ok(TruncationReport::new(
        TruncationTarget::Lemma27,
        vec![
            ParamValue::Int(j.into()),
            ParamValue::Int(b),
            ParamValue::Int(r),
            ParamValue::Rational(x.clone()),
        ],
        k,
        approx,
        reference,
        tolerance,
    ))
}

/// `Σ_{n=1}^{K} n^{-2j}` against `(-1)^{j+1} 2^{2j-1} π^{2j} B_{2j} / (2j)!`.
pub fn zeta_even_check(j: u32, k: u64) -> Result<TruncationReport> {
    ensure(j >= 1, "zeta_even_check", "j ≥ 1")?;
    ensure(k >= 1, "zeta_even_check", "K ≥ 1")?;
    let mut acc = Compensated::default();
    for n in (1..=k).rev() {
        acc.add((n as f64).powi(-2 * j as i32));
    }
    let sign: i64 = if j % 2 == 1 { 1 } else { -1 };
    let exact = Rational::from(sign) * Rational::from(2i64).pow(2 * j as i32 - 1) * bernoulli_number(2 * j)
        / Rational::from(factorial_int(2 * j));
    let reference = exact.to_f64() * PI.powi(2 * j as i32);
    let bound = (k as f64).powi(1 - 2 * j as i32) / f64::from(2 * j - 1);
    Ok(TruncationReport::new(
        TruncationTarget::ZetaEven,
        vec![ParamValue::Int(j.into())],
        k,
        Complex::real(acc.value()),
        Complex::real(reference),
        bound + ROUNDING_SLACK,
    ))
}

fn factorial_int(n: u32) -> crate::arith::Integer {
    (1..=n).map(crate::arith::Integer::from).product()
}

/// Both sides of the partial-fraction expansion of `1/((d-x)^m (d-y)^n)`.
pub fn lemma22_exact(m: u32, n: u32, d: &Rational, x: &Rational, y: &Rational) -> Result<(Rational, Rational)> {
    ensure(m >= 1 && n >= 1, "lemma22_exact", "m, n ≥ 1")?;
    ensure(d != x && d != y && x != y, "lemma22_exact", "d, x, y pairwise distinct")?;
    let (m, n) = (i64::from(m), i64::from(n));
    let (dx, dy, xy) = (d - x, d - y, x - y);
    let lhs = (dx.pow(m as i32) * dy.pow(n as i32)).recip();
    let neg = |e: i64| if e % 2 == 0 { Rational::ONE } else { -Rational::ONE };
    let choose = |a: i64, b: i64| binomial(a, b).map(Rational::from);
    let mut rhs = Rational::ZERO;
    for j in 1..=m {
        rhs += choose(m + n - j - 1, n - 1)? * neg(m - j) / (xy.pow((m + n - j) as i32) * dx.pow(j as i32));
    }
    for j in 1..=n {
        rhs += choose(m + n - j - 1, m - 1)? * neg(n - j) / ((-&xy).pow((m + n - j) as i32) * dy.pow(j as i32));
    }
    Ok((lhs, rhs))
}

/// `Σ_{j=1}^{m} C(m+n-j-1, n-1)` and `C(m+n-1, n)`.
pub fn lemma28_exact(m: u32, n: u32) -> Result<(crate::arith::Integer, crate::arith::Integer)> {
    ensure(m >= 1 && n >= 1, "lemma28_exact", "m, n ≥ 1")?;
    let (m, n) = (i64::from(m), i64::from(n));
    let mut lhs = crate::arith::Integer::from(0);
    for j in 1..=m {
        lhs += binomial(m + n - j - 1, n - 1)?;
    }
    Ok((lhs, binomial(m + n - 1, n)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn fourier_examples() {
        let r = fourier_partial(2, &q("1/4"), 1000).unwrap();
        assert_eq!(r.reference.re, -1.0 / 48.0);
        assert!(r.pass && r.abs_error <= 1e-5, "{r:?}");
        let r = fourier_partial(4, &q("0"), 100).unwrap();
        assert_eq!(r.reference.re, -1.0 / 30.0);
        assert!(r.pass && r.abs_error <= 1e-6, "{r:?}");
        let r = fourier_partial(3, &q("1/2"), 10).unwrap();
        assert_eq!(r.reference.re, 0.0);
        assert!(r.pass && r.abs_error <= 1e-2, "{r:?}");
        assert!(fourier_partial(1, &q("1/3"), 10).is_err());
    }

    #[test]
    fn fourier_imaginary_part_cancels() {
        for n in 2..=7 {
            for x in ["0", "1/4", "2/7", "-5/3", "1/2"] {
                let r = fourier_partial(n, &q(x), 2000).unwrap();
                assert!(r.approx.im.abs() <= 1e-12, "n = {n}, x = {x}: {}", r.approx.im);
            }
        }
    }

    #[test]
    fn lemma24_examples() {
        let r = lemma24_check(1, 2, 1, 100_000).unwrap();
        assert!(r.pass && r.abs_error <= 1e-3, "{r:?}");
        let r = lemma24_check(3, 1, 0, 1000).unwrap();
        assert!(
            r.pass && r.approx.re.abs() < 1e-12 && r.reference.re.abs() < 1e-12,
            "{r:?}"
        );
        let r = lemma24_check(2, 3, 1, 10_000).unwrap();
        assert!(r.pass, "{r:?}");
        let r = lemma24_check(2, -5, 7, 1000).unwrap();
        assert!(r.pass, "{r:?}");
        let r = lemma24_check(1, 3, 6, 1000).unwrap();
        assert!(r.pass, "{r:?}");
        assert!(lemma24_check(2, 1, 50, 10).is_err());
    }

    #[test]
    fn lemma27_examples() {
        let r = lemma27_check(2, 3, 1, &q("1/5"), 10_000).unwrap();
        assert!(r.pass && r.abs_error <= 1e-3, "{r:?}");
        let r = lemma27_check(1, 2, 1, &q("1/3"), 100_000).unwrap();
        assert!(r.pass && r.abs_error <= 1e-2, "{r:?}");
        let twisted = lemma27_check(2, 3, 1, &q("0"), 10_000).unwrap();
        let plain = lemma24_check(2, 3, 1, 10_000).unwrap();
        assert_eq!(twisted.approx, plain.approx);
        assert_eq!(twisted.reference, plain.reference);
        let r = lemma27_check(3, -4, 5, &q("-2/7"), 2000).unwrap();
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn zeta_examples() {
        let r = zeta_even_check(1, 1_000_000).unwrap();
        assert!((r.reference.re - PI * PI / 6.0).abs() < 1e-15);
        assert!(r.pass && r.abs_error <= 1e-6, "{r:?}");
        let r = zeta_even_check(2, 1000).unwrap();
        assert!((r.reference.re - PI.powi(4) / 90.0).abs() < 1e-15);
        assert!(r.pass && r.abs_error <= 1e-9, "{r:?}");
        let r = zeta_even_check(3, 100).unwrap();
        assert!((r.reference.re - PI.powi(6) / 945.0).abs() < 1e-14);
        assert!(r.pass);
    }

    #[test]
    fn errors_shrink_as_k_grows() {
        let grids: Vec<Box<dyn Fn(u64) -> TruncationReport>> = vec![
            Box::new(|k| fourier_partial(2, &q("1/4"), k).unwrap()),
            Box::new(|k| fourier_partial(3, &q("1/3"), k).unwrap()),
            Box::new(|k| lemma24_check(2, 3, 1, k).unwrap()),
            Box::new(|k| lemma24_check(1, 2, 1, k).unwrap()),
            Box::new(|k| lemma27_check(2, 3, 1, &q("1/5"), k).unwrap()),
            Box::new(|k| lemma27_check(1, 2, 1, &q("1/3"), k).unwrap()),
            Box::new(|k| zeta_even_check(1, k).unwrap()),
            Box::new(|k| zeta_even_check(2, k).unwrap()),
        ];
        for (i, report) in grids.iter().enumerate() {
            for k in [10u64, 40, 160, 640] {
                let (coarse, fine) = (report(k), report(4 * k));
                assert!(coarse.pass && fine.pass, "grid {i}, K = {k}");
                assert!(
                    fine.abs_error <= 2.0 * coarse.abs_error + ROUNDING_SLACK,
                    "grid {i}, K = {k}: {} then {}",
                    coarse.abs_error,
                    fine.abs_error
                );
            }
        }
    }

    #[test]
    fn json_layout() {
        let r = zeta_even_check(2, 10).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert!(
            json.starts_with(r#"{"target":"zeta-even","params":{"j":2},"K":10,"approx":{"re":"#),
            "{json}"
        );
        let back: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(back["approx"]["re"].as_f64(), Some(r.approx.re));
        assert_eq!(back["abs_error"].as_f64(), Some(r.abs_error));
    }

    fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
        Rational::new(rng.random_range(-9..=9), rng.random_range(1..=9)).unwrap()
    }

    #[test]
    fn lemma22_examples() {
        let (lhs, rhs) = lemma22_exact(1, 1, &q("0"), &q("1"), &q("2")).unwrap();
        assert_eq!((lhs.clone(), rhs), (q("1/2"), q("1/2")));
        let (lhs, rhs) = lemma22_exact(2, 1, &q("3"), &q("1"), &q("1/2")).unwrap();
        assert_eq!(lhs, rhs);
        let (lhs, rhs) = lemma22_exact(3, 4, &q("1/7"), &q("2/7"), &q("3/7")).unwrap();
        assert_eq!(lhs, rhs);
        assert!(lemma22_exact(1, 1, &q("1"), &q("1"), &q("2")).is_err());
    }

    #[test]
    fn lemma22_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        let mut checked = 0;
        while checked < 200 {
            let (d, x, y) = (
                random_rational(&mut rng),
                random_rational(&mut rng),
                random_rational(&mut rng),
            );
            if d == x || d == y || x == y {
                continue;
            }
            let (m, n) = (rng.random_range(1..=6), rng.random_range(1..=6));
            let (lhs, rhs) = lemma22_exact(m, n, &d, &x, &y).unwrap();
            assert_eq!(lhs, rhs, "m = {m}, n = {n}, d = {d}, x = {x}, y = {y}");
            checked += 1;
        }
    }

    #[test]
    fn lemma28_examples_and_random() {
        assert_eq!(lemma28_exact(1, 1).unwrap(), (1.into(), 1.into()));
        assert_eq!(lemma28_exact(3, 2).unwrap(), (6.into(), 6.into()));
        let (lhs, rhs) = lemma28_exact(5, 4).unwrap();
        assert_eq!(lhs, rhs);
        let mut rng = ChaCha8Rng::seed_from_u64(28);
        for _ in 0..200 {
            let (m, n) = (rng.random_range(1..=40), rng.random_range(1..=40));
            let (lhs, rhs) = lemma28_exact(m, n).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
