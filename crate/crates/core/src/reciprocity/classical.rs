//! The classical two- and three-term laws.

use super::terms::{choose, delta_int, gcd, int, neg_one_pow, pow};
use super::{CheckError, Evaluation, IdentityCase, IdentityReport};
use crate::arith::{mod_inverse, Rational};
use crate::bernoulli::{bernoulli_function, bernoulli_number, bernoulli_poly_frac};
use crate::error::Result;
use crate::params::InverseConvention;
use crate::sums::{apostol_s, berndt_s, carlitz_s, classical_s, count_ladder, rademacher_s};

pub fn check_dedekind(a: i64, b: i64) -> Result<IdentityReport, CheckError> {
    IdentityCase::Dedekind { a, b }.check()
}

pub fn check_rademacher_three(
    a: i64,
    b: i64,
    c: i64,
    convention: InverseConvention,
) -> Result<IdentityReport, CheckError> {
    IdentityCase::RademacherThreeTerm { a, b, c, convention }.check()
}

pub fn check_rademacher(a: i64, b: i64, x: &Rational, y: &Rational) -> Result<IdentityReport, CheckError> {
    IdentityCase::Rademacher {
        a,
        b,
        x: x.clone(),
        y: y.clone(),
    }
    .check()
}

pub fn check_rademacher_gcd(a: i64, b: i64, x: &Rational, y: &Rational) -> Result<IdentityReport, CheckError> {
    IdentityCase::RademacherGcd {
        a,
        b,
        x: x.clone(),
        y: y.clone(),
    }
    .check()
}

pub fn check_berndt(
    a: i64,
    b: i64,
    c: i64,
    x: &Rational,
    y: &Rational,
    z: &Rational,
) -> Result<IdentityReport, CheckError> {
    IdentityCase::Berndt {
        a,
        b,
        c,
        x: x.clone(),
        y: y.clone(),
        z: z.clone(),
    }
    .check()
}

pub fn check_apostol(n: i64, a: i64, b: i64) -> Result<IdentityReport, CheckError> {
    IdentityCase::Apostol { n, a, b }.check()
}

pub fn check_carlitz(n: i64, a: i64, b: i64, x: &Rational, y: &Rational) -> Result<IdentityReport, CheckError> {
    IdentityCase::Carlitz {
        n,
        a,
        b,
        x: x.clone(),
        y: y.clone(),
    }
    .check()
}

fn twelfth(v: Rational) -> Rational {
    v / 12
}

fn quarter() -> Rational {
    Rational::new(1, 4).expect("nonzero denominator")
}

pub(super) fn dedekind(a: i64, b: i64) -> Result<Evaluation> {
    let lhs = classical_s(a, b)? + classical_s(b, a)?;
    let (a_, b_) = (int(a), int(b));
    let rhs = twelfth(&a_ / &b_ + (&a_ * &b_).recip() + &b_ / &a_) - quarter();
    Ok(Evaluation::new(lhs, rhs))
}

pub(super) fn rademacher_three(a: i64, b: i64, c: i64, convention: InverseConvention) -> Result<Evaluation> {
    let (ai, bi, ci) = match convention {
        InverseConvention::Strong => (mod_inverse(a, b * c)?, mod_inverse(b, c * a)?, mod_inverse(c, a * b)?),
        InverseConvention::Dieter => (mod_inverse(a, b)?, mod_inverse(b, c)?, mod_inverse(c, a)?),
    };
    let lhs = classical_s(b * ci, a)? + classical_s(c * ai, b)? + classical_s(a * bi, c)?;
    let (a_, b_, c_) = (int(a), int(b), int(c));
    let rhs = twelfth(&a_ / (&b_ * &c_) + &b_ / (&c_ * &a_) + &c_ / (&a_ * &b_)) - quarter();
    Ok(Evaluation::new(lhs, rhs))
}

pub(super) fn rademacher(a: i64, b: i64, x: &Rational, y: &Rational) -> Result<Evaluation> {
    let lhs = rademacher_s(a, b, x, y)? + rademacher_s(b, a, y, x)?;
    let g = gcd(a, b);
    let gcd_arg = (y * a + x * b) / g;
    let rhs = bernoulli_function(1, x) * bernoulli_function(1, y)
        + int(a) * bernoulli_function(2, y) / (2 * b)
        + int(b) * bernoulli_function(2, x) / (2 * a)
        + int(g * g) * bernoulli_function(2, &gcd_arg) / (2 * a * b)
        - delta_int(x) * delta_int(y) * quarter();
    Ok(Evaluation::new(lhs, rhs))
}

/// One cyclic gcd term `c (a,b)² B̄_2((ay - bx)/(a,b)) / (2ab)`.
fn berndt_term(a: i64, b: i64, c: i64, x: &Rational, y: &Rational) -> Rational {
    let g = gcd(a, b);
    int(c * g * g) * bernoulli_function(2, &((y * a - x * b) / g)) / (2 * a * b)
}

pub(super) fn berndt(a: i64, b: i64, c: i64, x: &Rational, y: &Rational, z: &Rational) -> Result<Evaluation> {
    let lhs = berndt_s(a, b, c, x, y, z)? + berndt_s(b, c, a, y, z, x)? + berndt_s(c, a, b, z, x, y)?;
    let count = count_ladder(a, b, c, x, y, z)?;
    let rhs = berndt_term(a, b, c, x, y) + berndt_term(b, c, a, y, z) + berndt_term(c, a, b, z, x)
        - int(count as i64) * quarter();
    Ok(Evaluation::with_counter(lhs, rhs, count))
}

pub(super) fn apostol(n: u32, a: i64, b: i64) -> Result<Evaluation> {
    let lhs = int(a) * pow(b, n as i64) * apostol_s(n, a, b)? + int(b) * pow(a, n as i64) * apostol_s(n, b, a)?;
    let n_ = n as i64;
    let sum: Rational = (0..=n_ + 1)
        .map(|j| {
            choose(n_ + 1, j)
                * neg_one_pow(j)
                * pow(a, j)
                * pow(b, n_ + 1 - j)
                * bernoulli_number(j as u32)
                * bernoulli_number((n_ + 1 - j) as u32)
        })
        .sum();
    let rhs = (sum + int(n_) * bernoulli_number(n + 1)) / (n_ + 1);
    Ok(Evaluation::new(lhs, rhs))
}

pub(super) fn carlitz(n: u32, a: i64, b: i64, x: &Rational, y: &Rational) -> Result<Evaluation> {
    let n_ = n as i64;
    let lhs = int(a) * pow(b, n_) * carlitz_s(n, a, b, x, y)? + int(b) * pow(a, n_) * carlitz_s(n, b, a, y, x)?;
    let sum: Rational = (0..=n_ + 1)
        .map(|j| {
            choose(n_ + 1, j)
                * pow(a, j)
                * pow(b, n_ + 1 - j)
                * bernoulli_poly_frac(j as u32, y)
                * bernoulli_poly_frac((n_ + 1 - j) as u32, x)
        })
        .sum();
    let rhs = (sum + int(n_) * bernoulli_poly_frac(n + 1, &(y * a + x * b))) / (n_ + 1);
    Ok(Evaluation::new(lhs, rhs))
}
