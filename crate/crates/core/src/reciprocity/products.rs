//! Expansions of products of two Bernoulli functions and the two-term
//! reciprocity laws they specialize to.

use super::terms::{choose, delta_int, factorial, gcd, int, kron, neg_one_pow, pow, sgn};
use super::{CheckError, Evaluation, IdentityCase, IdentityReport};
use crate::arith::Rational;
use crate::bernoulli::bernoulli_function;
use crate::error::Result;
use crate::sums::{hwz_s, s_mn_two};

pub fn check_thm31(
    m: i64,
    n: i64,
    a: i64,
    b: i64,
    x: &Rational,
    y: &Rational,
    z: &Rational,
) -> Result<IdentityReport, CheckError> {
    IdentityCase::BernoulliProduct {
        m,
        n,
        a,
        b,
        x: x.clone(),
        y: y.clone(),
        z: z.clone(),
    }
    .check()
}

pub fn check_cor32(m: i64, n: i64, a: i64, b: i64, x: &Rational, y: &Rational) -> Result<IdentityReport, CheckError> {
    IdentityCase::ProductIntegerShift {
        m,
        n,
        a,
        b,
        x: x.clone(),
        y: y.clone(),
    }
    .check()
}

pub fn check_thm33(
    m: i64,
    n: i64,
    a: i64,
    b: i64,
    x: &Rational,
    y: &Rational,
    z: &Rational,
) -> Result<IdentityReport, CheckError> {
    IdentityCase::ProductDerivative {
        m,
        n,
        a,
        b,
        x: x.clone(),
        y: y.clone(),
        z: z.clone(),
    }
    .check()
}

pub fn check_cor34(m: i64, n: i64, a: i64, b: i64, x: &Rational, y: &Rational) -> Result<IdentityReport, CheckError> {
    IdentityCase::DerivativeIntegerShift {
        m,
        n,
        a,
        b,
        x: x.clone(),
        y: y.clone(),
    }
    .check()
}

fn quarter() -> Rational {
    Rational::new(1, 4).expect("nonzero denominator")
}

/// `Σ_{l=1}^{|b|} B̄_j(a(l+z)/b - y) B̄_k(x + (l+z)/b)`, the two-term sum that
/// both product expansions are built from.
fn inner(j: i64, k: i64, a: i64, b: i64, x: &Rational, y: &Rational, z: &Rational) -> Result<Rational> {
    hwz_s(j as u32, k as u32, a, 1, b, y, &-x, z)
}

/// `(-1)^{n-1} m! n! (a,b)^{m+n} B̄_{m+n}(arg/(a,b)) / (a^n b^m (m+n)!)`.
fn gcd_term(m: i64, n: i64, a: i64, b: i64, arg: &Rational) -> Rational {
    let g = gcd(a, b);
    factorial(m) * factorial(n) * pow(g, m + n) * bernoulli_function((m + n) as u32, &(arg / g))
        / (pow(a, n) * pow(b, m) * factorial(m + n))
}

pub(super) fn product(m: u32, n: u32, a: i64, b: i64, x: &Rational, y: &Rational, z: &Rational) -> Result<Evaluation> {
    let (m, n) = (m as i64, n as i64);
    let u = &(x * a) + y;
    let v = &(x * b) + z;
    let lhs = bernoulli_function(m as u32, &u) * bernoulli_function(n as u32, &v);

    let mut first = Rational::ZERO;
    for j in 0..=m {
        let w = choose(m, j) * neg_one_pow(j) * pow(a, m - j) / (m + n - j);
        first += w * inner(j, m + n - j, a, b, x, y, z)?;
    }
    let mut second = Rational::ZERO;
    for j in 0..=n {
        let w = choose(n, j) * neg_one_pow(j) * pow(b, n - j) / (m + n - j);
        second += w * inner(j, m + n - j, b, a, x, z, y)?;
    }
    let rhs = int(n) * pow(b, n - 1) * sgn(b) * first
        + int(m) * pow(a, m - 1) * sgn(a) * second
        + neg_one_pow(n - 1) * gcd_term(m, n, a, b, &(y * b - z * a))
        - kron(1, m) * kron(1, n) * sgn(a * b) * delta_int(&u) * delta_int(&v) * quarter();
    Ok(Evaluation::new(lhs, rhs))
}

pub(super) fn derivative(
    m: u32,
    n: u32,
    a: i64,
    b: i64,
    x: &Rational,
    y: &Rational,
    z: &Rational,
) -> Result<Evaluation> {
    let (m, n) = (m as i64, n as i64);
    let u = &(x * a) + y;
    let v = &(x * b) + z;
    let bf = |k: i64, t: &Rational| bernoulli_function(k as u32, t);
    let lhs = int(m * a) * bf(m - 1, &u) * bf(n, &v) + int(n * b) * bf(m, &u) * bf(n - 1, &v);

    let mut first = Rational::ZERO;
    for j in 0..=m {
        let w = choose(m, j) * neg_one_pow(j) * pow(a, m - j);
        first += w * inner(j, m + n - j - 1, a, b, x, y, z)?;
    }
    let mut second = Rational::ZERO;
    for j in 0..=n {
        let w = choose(n, j) * neg_one_pow(j) * pow(b, n - j);
        second += w * inner(j, m + n - j - 1, b, a, x, z, y)?;
    }
    let weight = kron(1, m - 1) * kron(1, n) * int(m * a) + kron(1, m) * kron(1, n - 1) * int(n * b);
    let rhs = int(n) * pow(b, n - 1) * sgn(b) * first + int(m) * pow(a, m - 1) * sgn(a) * second
        - sgn(a * b) * delta_int(&u) * delta_int(&v) * weight * quarter();
    Ok(Evaluation::new(lhs, rhs))
}

pub(super) fn product_integer_shift(m: u32, n: u32, a: i64, b: i64, x: &Rational, y: &Rational) -> Result<Evaluation> {
    let (m, n) = (m as i64, n as i64);
    let mut first = Rational::ZERO;
    for j in 0..=m {
        let w = choose(m, j) * neg_one_pow(m - j) * pow(a, m - j) / (m + n - j);
        first += w * s_mn_two(j as u32, (m + n - j) as u32, a, b, x, y)?;
    }
    let mut second = Rational::ZERO;
    for j in 0..=n {
        let w = choose(n, j) * neg_one_pow(n - j) * pow(b, n - j) / (m + n - j);
        second += w * s_mn_two(j as u32, (m + n - j) as u32, b, a, y, x)?;
    }
    let lhs = int(n) * pow(b, n - 1) * sgn(b) * first + int(m) * pow(a, m - 1) * sgn(a) * second;
    let rhs = bernoulli_function(m as u32, x) * bernoulli_function(n as u32, y)
        + gcd_term(m, n, a, b, &(y * a + x * b))
        - kron(1, m) * kron(1, n) * sgn(a * b) * delta_int(x) * delta_int(y) * quarter();
    Ok(Evaluation::new(lhs, rhs))
}

pub(super) fn derivative_integer_shift(
    m: u32,
    n: u32,
    a: i64,
    b: i64,
    x: &Rational,
    y: &Rational,
) -> Result<Evaluation> {
    let (m, n) = (m as i64, n as i64);
    let mut first = Rational::ZERO;
    for j in 0..=m {
        let w = choose(m, j) * neg_one_pow(m - j) * pow(a, m - j);
        first += w * s_mn_two(j as u32, (m + n - j - 1) as u32, a, b, x, y)?;
    }
    let mut second = Rational::ZERO;
    for j in 0..=n {
        let w = choose(n, j) * neg_one_pow(n - j) * pow(b, n - j);
        second += w * s_mn_two(j as u32, (m + n - j - 1) as u32, b, a, y, x)?;
    }
    let lhs = int(n) * pow(b, n - 1) * sgn(b) * first - int(m) * pow(a, m - 1) * sgn(a) * second;
    let bf = |k: i64, t: &Rational| bernoulli_function(k as u32, t);
    let weight = kron(1, m) * kron(1, n - 1) * int(n * b) - kron(1, m - 1) * kron(1, n) * int(m * a);
    let rhs = int(n * b) * bf(m, x) * bf(n - 1, y)
        - int(m * a) * bf(m - 1, x) * bf(n, y)
        - sgn(a * b) * delta_int(x) * delta_int(y) * weight * quarter();
    Ok(Evaluation::new(lhs, rhs))
}
