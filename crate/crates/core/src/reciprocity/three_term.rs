//! Three-term laws for the Hall–Wilson–Zagier sums and their
//! specializations.

use super::terms::{choose, delta_int, factorial, gcd, int, kron, neg_one_pow, pow, sgn};
use super::{CheckError, Evaluation, IdentityCase, IdentityReport};
use crate::arith::Rational;
use crate::bernoulli::{bernoulli_function, bernoulli_number};
use crate::error::Result;
use crate::sums::{count_ladder, hwz_s, s_mn_plain, s_n_two};

#[allow(clippy::too_many_arguments)]
pub fn check_thm41(
    m: i64,
    n: i64,
    a: i64,
    b: i64,
    c: i64,
    x: &Rational,
    y: &Rational,
    z: &Rational,
) -> Result<IdentityReport, CheckError> {
    IdentityCase::HwzThreeTerm {
        m,
        n,
        a,
        b,
        c,
        x: x.clone(),
        y: y.clone(),
        z: z.clone(),
    }
    .check()
}

pub fn check_cor42(n: i64, a: i64, b: i64, x: &Rational, y: &Rational) -> Result<IdentityReport, CheckError> {
    IdentityCase::TwoTermN {
        n,
        a,
        b,
        x: x.clone(),
        y: y.clone(),
    }
    .check()
}

pub fn check_cor43(p: i64, r: i64, a: i64, b: i64, c: i64) -> Result<IdentityReport, CheckError> {
    IdentityCase::HallWilson { p, r, a, b, c }.check()
}

#[allow(clippy::too_many_arguments)]
pub fn check_thm44(
    m: i64,
    n: i64,
    a: i64,
    b: i64,
    c: i64,
    x: &Rational,
    y: &Rational,
    z: &Rational,
) -> Result<IdentityReport, CheckError> {
    IdentityCase::HwzDerivative {
        m,
        n,
        a,
        b,
        c,
        x: x.clone(),
        y: y.clone(),
        z: z.clone(),
    }
    .check()
}

pub fn check_cor45(m: i64, n: i64, a: i64, b: i64, c: i64) -> Result<IdentityReport, CheckError> {
    IdentityCase::HallWilsonDerivative { m, n, a, b, c }.check()
}

#[allow(clippy::too_many_arguments)]
fn sum_hwz(j: i64, k: i64, a: i64, b: i64, c: i64, x: &Rational, y: &Rational, z: &Rational) -> Result<Rational> {
    hwz_s(j as u32, k as u32, a, b, c, x, y, z)
}

fn plain(j: i64, k: i64, a: i64, b: i64, c: i64) -> Result<Rational> {
    s_mn_plain(j as u32, k as u32, a, b, c)
}

fn quarter() -> Rational {
    Rational::new(1, 4).expect("nonzero denominator")
}

#[allow(clippy::too_many_arguments)]
pub(super) fn hwz(
    m: u32,
    n: u32,
    a: i64,
    b: i64,
    c: i64,
    x: &Rational,
    y: &Rational,
    z: &Rational,
) -> Result<Evaluation> {
    let (m, n) = (m as i64, n as i64);
    let lhs = sum_hwz(m, n, a, b, c, x, y, z)?;

    let mut first = Rational::ZERO;
    for j in 0..=m {
        let w = choose(m, j) * neg_one_pow(m + n - j) * pow(a, m - j) / (pow(c, m + n - j - 1) * int(m + n - j));
        first += w * sum_hwz(j, m + n - j, a, c, b, x, z, y)?;
    }
    let mut second = Rational::ZERO;
    for j in 0..=n {
        let w = choose(n, j) * neg_one_pow(m + n - j) * pow(b, n - j) / (pow(c, m + n - j - 1) * int(m + n - j));
        second += w * sum_hwz(j, m + n - j, b, c, a, y, z, x)?;
    }
    let g = gcd(a, b);
    let gcd_term = neg_one_pow(n - 1)
        * factorial(m)
        * factorial(n)
        * int(c * c.signum())
        * pow(g, m + n)
        * bernoulli_function((m + n) as u32, &((y * a - x * b) / g))
        / (pow(a, n) * pow(b, m) * factorial(m + n));
    let count = count_ladder(a, b, c, x, y, z)?;
    let rhs = int(n) * pow(b, n - 1) * sgn(b * c) * first + int(m) * pow(a, m - 1) * sgn(a * c) * second + gcd_term
        - kron(1, m) * kron(1, n) * sgn(a * b) * int(count as i64) * quarter();
    Ok(Evaluation::with_counter(lhs, rhs, count))
}

#[allow(clippy::too_many_arguments)]
pub(super) fn hwz_derivative(
    m: u32,
    n: u32,
    a: i64,
    b: i64,
    c: i64,
    x: &Rational,
    y: &Rational,
    z: &Rational,
) -> Result<Evaluation> {
    let (m, n) = (m as i64, n as i64);
    let lhs = int(m * a) * sum_hwz(m - 1, n, a, b, c, x, y, z)? + int(n * b) * sum_hwz(m, n - 1, a, b, c, x, y, z)?;

    let mut first = Rational::ZERO;
    for j in 0..=m {
        let w = choose(m, j) * neg_one_pow(m - j) * pow(a, m - j) / pow(c, m + n - j - 2);
        first += w * sum_hwz(j, m + n - j - 1, a, c, b, x, z, y)?;
    }
    let mut second = Rational::ZERO;
    for j in 0..=n {
        let w = choose(n, j) * neg_one_pow(n - j) * pow(b, n - j) / pow(c, m + n - j - 2);
        second += w * sum_hwz(j, m + n - j - 1, b, c, a, y, z, x)?;
    }
    let count = count_ladder(a, b, c, x, y, z)?;
    let weight = kron(1, m - 1) * kron(1, n) * int(m * a) + kron(1, m) * kron(1, n - 1) * int(n * b);
    let rhs = neg_one_pow(n - 1) * int(n) * pow(b, n - 1) * sgn(b * c) * first
        + neg_one_pow(m - 1) * int(m) * pow(a, m - 1) * sgn(a * c) * second
        - sgn(a * b) * weight * int(count as i64) * quarter();
    Ok(Evaluation::with_counter(lhs, rhs, count))
}

pub(super) fn two_term_n(n: u32, a: i64, b: i64, x: &Rational, y: &Rational) -> Result<Evaluation> {
    let n_ = n as i64;
    let lhs = int(a) * pow(b, n_) * s_n_two(n, a, b, x, y)? + int(b) * pow(a, n_) * s_n_two(n, b, a, y, x)?;
    let sum: Rational = (0..=n_ + 1)
        .map(|j| {
            choose(n_ + 1, j)
                * pow(a, j)
                * pow(b, n_ + 1 - j)
                * bernoulli_function(j as u32, y)
                * bernoulli_function((n_ + 1 - j) as u32, x)
        })
        .sum();
    let g = gcd(a, b);
    let gcd_term = int(n_) * pow(g, n_ + 1) * bernoulli_function(n + 1, &((y * a + x * b) / g));
    let rhs = (sum + gcd_term) / (n_ + 1) - kron(1, n_) * delta_int(x) * delta_int(y) * int(a * b) * quarter();
    Ok(Evaluation::new(lhs, rhs))
}

pub(super) fn hall_wilson(p: u32, r: u32, a: i64, b: i64, c: i64) -> Result<Evaluation> {
    let (p, r) = (p as i64, r as i64);
    let mut lhs = Rational::ZERO;
    for j in 1..=r + 1 {
        let w = choose(p + 1, j)
            * choose(p - j, p - 1 - r)
            * neg_one_pow(j + 1)
            * pow(a, p)
            * pow(b, p + 1 - j)
            * pow(c, j);
        lhs += w * plain(j, p + 1 - j, b, c, a)?;
    }
    for j in 1..=p - r {
        let w = choose(p + 1, j) * choose(p - j, r) * neg_one_pow(j + 1) * pow(a, p + 1 - j) * pow(b, p) * pow(c, j);
        lhs += w * plain(j, p + 1 - j, a, c, b)?;
    }
    lhs += choose(p + 1, r + 1) * pow(a, r + 1) * pow(b, p - r) * pow(c, p) * plain(p - r, r + 1, a, b, c)?;

    let zero = Rational::ZERO;
    let count = count_ladder(a, b, c, &zero, &zero, &zero)?;
    let rhs = (choose(p, r) * pow(a, p + 1) * pow(gcd(b, c), p + 1)
        + choose(p, r + 1) * pow(b, p + 1) * pow(gcd(a, c), p + 1)
        + neg_one_pow(r) * pow(c, p + 1) * pow(gcd(a, b), p + 1))
        * bernoulli_number((p + 1) as u32)
        - kron(1, p) * int(a * b * c) * int(count as i64) / 2;
    Ok(Evaluation::with_counter(lhs, rhs, count))
}

pub(super) fn hall_wilson_derivative(m: u32, n: u32, a: i64, b: i64, c: i64) -> Result<Evaluation> {
    let (m, n) = (m as i64, n as i64);
    let mut first = Rational::ZERO;
    for j in 0..=m {
        let w = choose(m, j) * neg_one_pow(m - j) * pow(a, m - j) * pow(c, j - m);
        first += w * plain(j, m + n - j - 1, a, c, b)?;
    }
    let mut second = Rational::ZERO;
    for j in 0..=n {
        let w = choose(n, j) * neg_one_pow(n - j) * pow(b, n - j) * pow(c, j - n);
        second += w * plain(j, m + n - j - 1, b, c, a)?;
    }
    let lhs = int(n) * pow(b, n - 1) * pow(c, m + 1) * first - int(m) * pow(a, m - 1) * pow(c, n + 1) * second;

    let zero = Rational::ZERO;
    let count = count_ladder(a, b, c, &zero, &zero, &zero)?;
    let weight = kron(1, m) * kron(1, n - 1) * int(n * b * c * c) - kron(1, m - 1) * kron(1, n) * int(m * a * c * c);
    let rhs = int(n * b) * pow(c, m + n - 1) * plain(m, n - 1, a, -b, c)?
        - int(m * a) * pow(c, m + n - 1) * plain(n, m - 1, b, -a, c)?
        - weight * int(count as i64) * quarter();
    Ok(Evaluation::with_counter(lhs, rhs, count))
}
