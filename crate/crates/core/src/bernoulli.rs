//! Bernoulli numbers, Bernoulli polynomials, the sawtooth function and the
//! periodized Bernoulli functions `B̄_n`.
//!
//! Numbers come from the recurrence `Σ_{j=0}^{n} C(n+1, j) B_j = 0` with
//! `B_0 = 1` (so `B_1 = -1/2`). Polynomial coefficient rows are derived from
//! them and memoized in a process-wide [`BernoulliCache`]; asking for index
//! `n` fills every index up to `n`.

use std::sync::{OnceLock, RwLock};

use crate::arith::{binomial, Rational};
use crate::error::{ensure, Result};

/// Memoized Bernoulli numbers and polynomial coefficient rows.
///
/// Row `n` holds the monomial coefficients of `B_n(x)` from degree `n` down
/// to degree 0, i.e. `row[k] = C(n, k) · B_k`.
#[derive(Debug, Clone)]
pub struct BernoulliCache {
    numbers: Vec<Rational>,
    poly_rows: Vec<Vec<Rational>>,
}

impl Default for BernoulliCache {
    fn default() -> Self {
        Self::new()
    }
}

impl BernoulliCache {
    pub fn new() -> Self {
        BernoulliCache {
            numbers: vec![Rational::ONE],
            poly_rows: vec![vec![Rational::ONE]],
        }
    }

    /// Extends the cache so that indices `0..=n` are available.
    pub fn fill(&mut self, n: usize) {
        while self.numbers.len() <= n {
            let m = self.numbers.len() as i64;
            let acc: Rational = self
                .numbers
                .iter()
                .enumerate()
                .map(|(j, b)| b * Rational::from(binom(m + 1, j as i64)))
                .sum();
            self.numbers.push(-(acc / Rational::from(m + 1)));
        }
        while self.poly_rows.len() <= n {
            let deg = self.poly_rows.len() as i64;
            let row = (0..=deg)
                .map(|k| &self.numbers[k as usize] * Rational::from(binom(deg, k)))
                .collect();
            self.poly_rows.push(row);
        }
    }

    pub fn number(&self, j: usize) -> Option<&Rational> {
        self.numbers.get(j)
    }

    pub fn row(&self, n: usize) -> Option<&[Rational]> {
        self.poly_rows.get(n).map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.numbers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numbers.is_empty()
    }
}

fn binom(n: i64, k: i64) -> crate::arith::Integer {
    binomial(n, k).expect("n is non-negative")
}

fn cache() -> &'static RwLock<BernoulliCache> {
    static CACHE: OnceLock<RwLock<BernoulliCache>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(BernoulliCache::new()))
}

fn with_cache<R>(n: usize, f: impl FnOnce(&BernoulliCache) -> R) -> R {
    let lock = cache();
    {
        let guard = lock.read().unwrap_or_else(|e| e.into_inner());
        if guard.len() > n && guard.poly_rows.len() > n {
            return f(&guard);
        }
    }
    lock.write().unwrap_or_else(|e| e.into_inner()).fill(n);
    let guard = lock.read().unwrap_or_else(|e| e.into_inner());
    f(&guard)
}

/// Exact `B_j` under the convention `B_j = B_j(0)`.
pub fn bernoulli_number(j: u32) -> Rational {
    with_cache(j as usize, |c| c.numbers[j as usize].clone())
}

/// Coefficient row of `B_n(x)`, highest degree first.
pub fn bernoulli_poly_coeffs(n: u32) -> Vec<Rational> {
    with_cache(n as usize, |c| c.poly_rows[n as usize].clone())
}

/// Exact `B_n(x) = Σ_k C(n, k) B_k x^{n-k}`.
pub fn bernoulli_poly(n: u32, x: &Rational) -> Rational {
    with_cache(n as usize, |c| horner(&c.poly_rows[n as usize], x))
}

fn horner(row: &[Rational], x: &Rational) -> Rational {
    let mut iter = row.iter();
    let mut acc = iter.next().cloned().unwrap_or(Rational::ZERO);
    for coeff in iter {
        acc = &(&acc * x) + coeff;
    }
    acc
}

/// `((x))`: zero on the integers, `{x} - 1/2` elsewhere.
pub fn sawtooth(x: &Rational) -> Rational {
    if x.is_integer() {
        Rational::ZERO
    } else {
        x.fract() - &half()
    }
}

fn half() -> Rational {
    Rational::new(1, 2).expect("nonzero denominator")
}

/// The periodized Bernoulli function `B̄_n`.
///
/// `B̄_0 = 1`, `B̄_1` is the sawtooth (value 0 at integers), and
/// `B̄_n(x) = B_n({x})` for `n ≥ 2`.
pub fn bernoulli_function(n: u32, x: &Rational) -> Rational {
    match n {
        0 => Rational::ONE,
        1 => sawtooth(x),
        _ => bernoulli_poly(n, &x.fract()),
    }
}

/// `B_n({x})` with no adjustment at the integers, so `B_1({k}) = -1/2`.
/// This is the kernel of the Carlitz sums.
pub fn bernoulli_poly_frac(n: u32, x: &Rational) -> Rational {
    bernoulli_poly(n, &x.fract())
}

/// Coefficient row (highest degree first) of `d/dx B_n(x)`, obtained by
/// differentiating the monomials of row `n`.
pub fn bernoulli_poly_derivative_coeffs(n: u32) -> Result<Vec<Rational>> {
    ensure(n >= 1, "bernoulli_poly_derivative_coeffs", "n ≥ 1")?;
    let row = bernoulli_poly_coeffs(n);
    Ok(row
        .iter()
        .take(n as usize)
        .enumerate()
        .map(|(k, c)| c * Rational::from(n as i64 - k as i64))
        .collect())
}
