//! The generalized Dedekind sum families, each evaluated by literal direct
//! summation over `r = 1..=|modulus|` with signed division exactly as the
//! definitions are written, plus the lattice-point counter that appears in
//! the three-term reciprocity remainders.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::bernoulli::{bernoulli_function, bernoulli_poly_frac, sawtooth};
use crate::error::{ensure, Result};
use crate::params::{int, rat, ParamList, ParamSpec, ParamValue};

/// Classical Dedekind sum `s(a, b) = Σ_{r=1}^{|b|} ((r/b)) ((ar/b))`.
pub fn classical_s(a: i64, b: i64) -> Result<Rational> {
    ensure(b != 0, "classical_s", "b ≠ 0")?;
    Ok((1..=b.abs())
        .map(|r| {
            let u = Rational::new(r, b).expect("b ≠ 0");
            let v = &u * a;
            sawtooth(&u) * sawtooth(&v)
        })
        .sum())
}

/// Dedekind–Rademacher sum `s(a, b; x, y)`.
pub fn rademacher_s(a: i64, b: i64, x: &Rational, y: &Rational) -> Result<Rational> {
    ensure(b != 0, "rademacher_s", "b ≠ 0")?;
    Ok((1..=b.abs())
        .map(|r| {
            let u = (y + r) / b;
            let v = &(&u * a) + x;
            sawtooth(&u) * sawtooth(&v)
        })
        .sum())
}

/// Berndt's sum `s(a, b, c; x, y, z) = Σ_{r=1}^{|c|} ((a(r+z)/c - x)) ((b(r+z)/c - y))`.
pub fn berndt_s(a: i64, b: i64, c: i64, x: &Rational, y: &Rational, z: &Rational) -> Result<Rational> {
    ensure(c != 0, "berndt_s", "c ≠ 0")?;
    Ok((1..=c.abs())
        .map(|r| {
            let u = (z + r) / c;
            sawtooth(&(&u * a - x)) * sawtooth(&(&u * b - y))
        })
        .sum())
}

/// Apostol's sum `s_n(a, b) = Σ_{r=1}^{|b|} B̄_1(r/b) B̄_n(ar/b)`.
pub fn apostol_s(n: u32, a: i64, b: i64) -> Result<Rational> {
    ensure(n >= 1, "apostol_s", "n ≥ 1")?;
    ensure(b != 0, "apostol_s", "b ≠ 0")?;
    Ok((1..=b.abs())
        .map(|r| {
            let u = Rational::new(r, b).expect("b ≠ 0");
            bernoulli_function(1, &u) * bernoulli_function(n, &(&u * a))
        })
        .sum())
}

/// Carlitz's sum, built from the raw kernels `B_1({·})` and `B_n({·})`
/// (so `B_1` contributes `-1/2` at integer arguments).
pub fn carlitz_s(n: u32, a: i64, b: i64, x: &Rational, y: &Rational) -> Result<Rational> {
    ensure(b != 0, "carlitz_s", "b ≠ 0")?;
    Ok((1..=b.abs())
        .map(|r| {
            let u = (y + r) / b;
            let v = &(&u * a) + x;
            bernoulli_poly_frac(1, &u) * bernoulli_poly_frac(n, &v)
        })
        .sum())
}

/// Hall–Wilson–Zagier sum
/// `Σ_{r=1}^{|c|} B̄_m(a(r+z)/c - x) B̄_n(b(r+z)/c - y)`.
#[allow(clippy::too_many_arguments)]
pub fn hwz_s(m: u32, n: u32, a: i64, b: i64, c: i64, x: &Rational, y: &Rational, z: &Rational) -> Result<Rational> {
    ensure(c != 0, "hwz_s", "c ≠ 0")?;
    Ok((1..=c.abs())
        .map(|r| {
            let u = (z + r) / c;
            bernoulli_function(m, &(&u * a - x)) * bernoulli_function(n, &(&u * b - y))
        })
        .sum())
}

/// `s_{m,n}(a, b; x, y) = Σ_{r=1}^{|b|} B̄_m(a(r+y)/b + x) B̄_n((r+y)/b)`.
pub fn s_mn_two(m: u32, n: u32, a: i64, b: i64, x: &Rational, y: &Rational) -> Result<Rational> {
    ensure(b != 0, "s_mn_two", "b ≠ 0")?;
    Ok((1..=b.abs())
        .map(|r| {
            let u = (y + r) / b;
            bernoulli_function(m, &(&(&u * a) + x)) * bernoulli_function(n, &u)
        })
        .sum())
}

/// `s_n(a, b; x, y) = Σ_{r=1}^{|b|} B̄_1((r+y)/b) B̄_n(a(r+y)/b + x)`.
pub fn s_n_two(n: u32, a: i64, b: i64, x: &Rational, y: &Rational) -> Result<Rational> {
    ensure(b != 0, "s_n_two", "b ≠ 0")?;
    Ok((1..=b.abs())
        .map(|r| {
            let u = (y + r) / b;
            bernoulli_function(1, &u) * bernoulli_function(n, &(&(&u * a) + x))
        })
        .sum())
}

/// `s_{m,n}(a, b, c) = Σ_{r=1}^{|c|} B̄_m(ar/c) B̄_n(br/c)`.
pub fn s_mn_plain(m: u32, n: u32, a: i64, b: i64, c: i64) -> Result<Rational> {
    ensure(c != 0, "s_mn_plain", "c ≠ 0")?;
    Ok((1..=c.abs())
        .map(|r| {
            let u = Rational::new(r, c).expect("c ≠ 0");
            bernoulli_function(m, &(&u * a)) * bernoulli_function(n, &(&u * b))
        })
        .sum())
}

/// Number of integer triples `(r, s, t)` with
/// `0 ≤ sgn(c)(r+x)/a = sgn(c)(s+y)/b = sgn(c)(t+z)/c < 1`.
///
/// The common value is `u = (k + {z})/|c|` for `k = 0..|c|`, and each `k`
/// determines its triple, so this counts the `k` for which both
/// `sgn(c)·a·u - x` and `sgn(c)·b·u - y` are integers. An empty chain
/// counts as zero.
pub fn count_ladder(a: i64, b: i64, c: i64, x: &Rational, y: &Rational, z: &Rational) -> Result<u64> {
    ensure(a != 0, "count_ladder", "a ≠ 0")?;
    ensure(b != 0, "count_ladder", "b ≠ 0")?;
    ensure(c != 0, "count_ladder", "c ≠ 0")?;
    let (sa, sb) = (a * c.signum(), b * c.signum());
    let frac_z = z.fract();
    Ok((0..c.abs())
        .filter(|&k| {
            let u = (&frac_z + k) / c.abs();
            (&u * sa - x).is_integer() && (&u * sb - y).is_integer()
        })
        .count() as u64)
}

/// A sum family together with its full parameter tuple.
///
/// The JSON encoding is tagged by `family`; integers are JSON numbers and
/// rationals are literal strings such as `"-7/3"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case", deny_unknown_fields)]
pub enum SumRequest {
    Classical {
        a: i64,
        b: i64,
    },
    Rademacher {
        a: i64,
        b: i64,
        x: Rational,
        y: Rational,
    },
    Berndt3 {
        a: i64,
        b: i64,
        c: i64,
        x: Rational,
        y: Rational,
        z: Rational,
    },
    Apostol {
        n: u32,
        a: i64,
        b: i64,
    },
    Carlitz {
        n: u32,
        a: i64,
        b: i64,
        x: Rational,
        y: Rational,
    },
    Hwz {
        m: u32,
        n: u32,
        a: i64,
        b: i64,
        c: i64,
        x: Rational,
        y: Rational,
        z: Rational,
    },
    TwoTermMn {
        m: u32,
        n: u32,
        a: i64,
        b: i64,
        x: Rational,
        y: Rational,
    },
    TwoTermN {
        n: u32,
        a: i64,
        b: i64,
        x: Rational,
        y: Rational,
    },
    PlainMn {
        m: u32,
        n: u32,
        a: i64,
        b: i64,
        c: i64,
    },
}

/// The sum families, with their command-line tags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SumFamily {
    Classical,
    Rademacher,
    Berndt3,
    Apostol,
    Carlitz,
    Hwz,
    TwoTermMn,
    TwoTermN,
    PlainMn,
}

impl SumFamily {
    pub const ALL: [SumFamily; 9] = [
        SumFamily::Classical,
        SumFamily::Rademacher,
        SumFamily::Berndt3,
        SumFamily::Apostol,
        SumFamily::Carlitz,
        SumFamily::Hwz,
        SumFamily::TwoTermMn,
        SumFamily::TwoTermN,
        SumFamily::PlainMn,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            SumFamily::Classical => "classical",
            SumFamily::Rademacher => "rademacher",
            SumFamily::Berndt3 => "berndt3",
            SumFamily::Apostol => "apostol",
            SumFamily::Carlitz => "carlitz",
            SumFamily::Hwz => "hwz",
            SumFamily::TwoTermMn => "two-term-mn",
            SumFamily::TwoTermN => "two-term-n",
            SumFamily::PlainMn => "plain-mn",
        }
    }

    /// Parameter names and kinds in the order of the request fields.
    pub fn params(self) -> &'static [ParamSpec] {
        const AB: &[ParamSpec] = &[int("a"), int("b")];
        const ABXY: &[ParamSpec] = &[int("a"), int("b"), rat("x"), rat("y")];
        const ABCXYZ: &[ParamSpec] = &[int("a"), int("b"), int("c"), rat("x"), rat("y"), rat("z")];
        const NAB: &[ParamSpec] = &[int("n"), int("a"), int("b")];
        const NABXY: &[ParamSpec] = &[int("n"), int("a"), int("b"), rat("x"), rat("y")];
        const MNABCXYZ: &[ParamSpec] = &[
            int("m"),
            int("n"),
            int("a"),
            int("b"),
            int("c"),
            rat("x"),
            rat("y"),
            rat("z"),
        ];
        const MNABXY: &[ParamSpec] = &[int("m"), int("n"), int("a"), int("b"), rat("x"), rat("y")];
        const MNABC: &[ParamSpec] = &[int("m"), int("n"), int("a"), int("b"), int("c")];
        match self {
            SumFamily::Classical => AB,
            SumFamily::Rademacher => ABXY,
            SumFamily::Berndt3 => ABCXYZ,
            SumFamily::Apostol => NAB,
            SumFamily::Carlitz | SumFamily::TwoTermN => NABXY,
            SumFamily::Hwz => MNABCXYZ,
            SumFamily::TwoTermMn => MNABXY,
            SumFamily::PlainMn => MNABC,
        }
    }
}

impl fmt::Display for SumFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for SumFamily {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        SumFamily::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| format!("unknown sum family {s:?}"))
    }
}

impl SumRequest {
    pub fn family(&self) -> SumFamily {
        match self {
            SumRequest::Classical { .. } => SumFamily::Classical,
            SumRequest::Rademacher { .. } => SumFamily::Rademacher,
            SumRequest::Berndt3 { .. } => SumFamily::Berndt3,
            SumRequest::Apostol { .. } => SumFamily::Apostol,
            SumRequest::Carlitz { .. } => SumFamily::Carlitz,
            SumRequest::Hwz { .. } => SumFamily::Hwz,
            SumRequest::TwoTermMn { .. } => SumFamily::TwoTermMn,
            SumRequest::TwoTermN { .. } => SumFamily::TwoTermN,
            SumRequest::PlainMn { .. } => SumFamily::PlainMn,
        }
    }

    /// The parameter values in the order of [`SumFamily::params`].
    pub fn params(&self) -> ParamList {
        use ParamValue::{Int as I, Rational as R};
        let o = |v: &u32| I(i64::from(*v));
        let values = match self {
            SumRequest::Classical { a, b } => vec![I(*a), I(*b)],
            SumRequest::Rademacher { a, b, x, y } => vec![I(*a), I(*b), R(x.clone()), R(y.clone())],
            SumRequest::Berndt3 { a, b, c, x, y, z } => {
                vec![I(*a), I(*b), I(*c), R(x.clone()), R(y.clone()), R(z.clone())]
            }
            SumRequest::Apostol { n, a, b } => vec![o(n), I(*a), I(*b)],
            SumRequest::Carlitz { n, a, b, x, y } | SumRequest::TwoTermN { n, a, b, x, y } => {
                vec![o(n), I(*a), I(*b), R(x.clone()), R(y.clone())]
            }
            SumRequest::Hwz { m, n, a, b, c, x, y, z } => vec![
                o(m),
                o(n),
                I(*a),
                I(*b),
                I(*c),
                R(x.clone()),
                R(y.clone()),
                R(z.clone()),
            ],
            SumRequest::TwoTermMn { m, n, a, b, x, y } => {
                vec![o(m), o(n), I(*a), I(*b), R(x.clone()), R(y.clone())]
            }
            SumRequest::PlainMn { m, n, a, b, c } => vec![o(m), o(n), I(*a), I(*b), I(*c)],
        };
        let names = self.family().params().iter().map(|s| s.name);
        ParamList(names.zip(values).collect())
    }

    /// Builds a request from values listed in the order of
    /// [`SumFamily::params`].
    pub fn from_params(family: SumFamily, values: &[ParamValue]) -> std::result::Result<SumRequest, String> {
        let specs = family.params();
        if values.len() != specs.len() || specs.iter().zip(values).any(|(s, v)| s.kind != v.kind()) {
            let names: Vec<&str> = specs.iter().map(|s| s.name).collect();
            return Err(format!("{family} takes parameters {}", names.join(", ")));
        }
        // every family lists its integers before its rationals
        let ints: Vec<i64> = values
            .iter()
            .filter_map(|v| match v {
                ParamValue::Int(i) => Some(*i),
                _ => None,
            })
            .collect();
        let rats: Vec<Rational> = values
            .iter()
            .filter_map(|v| match v {
                ParamValue::Rational(q) => Some(q.clone()),
                _ => None,
            })
            .collect();
        let order = |i: usize| u32::try_from(ints[i]).map_err(|_| format!("{family} requires {} ≥ 0", specs[i].name));
        let (x, y, z) = (rats.first().cloned(), rats.get(1).cloned(), rats.get(2).cloned());
        Ok(match family {
            SumFamily::Classical => SumRequest::Classical { a: ints[0], b: ints[1] },
            SumFamily::Rademacher => SumRequest::Rademacher {
                a: ints[0],
                b: ints[1],
                x: x.unwrap(),
                y: y.unwrap(),
            },
            SumFamily::Berndt3 => SumRequest::Berndt3 {
                a: ints[0],
                b: ints[1],
                c: ints[2],
                x: x.unwrap(),
                y: y.unwrap(),
                z: z.unwrap(),
            },
            SumFamily::Apostol => SumRequest::Apostol {
                n: order(0)?,
                a: ints[1],
                b: ints[2],
            },
            SumFamily::Carlitz => SumRequest::Carlitz {
                n: order(0)?,
                a: ints[1],
                b: ints[2],
                x: x.unwrap(),
                y: y.unwrap(),
            },
            SumFamily::TwoTermN => SumRequest::TwoTermN {
                n: order(0)?,
                a: ints[1],
                b: ints[2],
                x: x.unwrap(),
                y: y.unwrap(),
            },
            SumFamily::Hwz => SumRequest::Hwz {
                m: order(0)?,
                n: order(1)?,
                a: ints[2],
                b: ints[3],
                c: ints[4],
                x: x.unwrap(),
                y: y.unwrap(),
                z: z.unwrap(),
            },
            SumFamily::TwoTermMn => SumRequest::TwoTermMn {
                m: order(0)?,
                n: order(1)?,
                a: ints[2],
                b: ints[3],
                x: x.unwrap(),
                y: y.unwrap(),
            },
            SumFamily::PlainMn => SumRequest::PlainMn {
                m: order(0)?,
                n: order(1)?,
                a: ints[2],
                b: ints[3],
                c: ints[4],
            },
        })
    }

    /// Whether the request lies in the domain of its sum, without
    /// evaluating it.
    pub fn in_domain(&self) -> bool {
        match self {
            SumRequest::Classical { b, .. }
            | SumRequest::Rademacher { b, .. }
            | SumRequest::Carlitz { b, .. }
            | SumRequest::TwoTermMn { b, .. }
            | SumRequest::TwoTermN { b, .. } => *b != 0,
            SumRequest::Apostol { n, b, .. } => *n >= 1 && *b != 0,
            SumRequest::Berndt3 { c, .. } | SumRequest::Hwz { c, .. } | SumRequest::PlainMn { c, .. } => *c != 0,
        }
    }

    /// Evaluates the requested sum exactly.
    pub fn evaluate(&self) -> Result<Rational> {
        match self {
            SumRequest::Classical { a, b } => classical_s(*a, *b),
            SumRequest::Rademacher { a, b, x, y } => rademacher_s(*a, *b, x, y),
            SumRequest::Berndt3 { a, b, c, x, y, z } => berndt_s(*a, *b, *c, x, y, z),
            SumRequest::Apostol { n, a, b } => apostol_s(*n, *a, *b),
            SumRequest::Carlitz { n, a, b, x, y } => carlitz_s(*n, *a, *b, x, y),
            SumRequest::Hwz { m, n, a, b, c, x, y, z } => hwz_s(*m, *n, *a, *b, *c, x, y, z),
            SumRequest::TwoTermMn { m, n, a, b, x, y } => s_mn_two(*m, *n, *a, *b, x, y),
            SumRequest::TwoTermN { n, a, b, x, y } => s_n_two(*n, *a, *b, x, y),
            SumRequest::PlainMn { m, n, a, b, c } => s_mn_plain(*m, *n, *a, *b, *c),
        }
    }
}
