//! Exact verification of reciprocity laws for the sum families.
//!
//! Every check validates the hypotheses of its identity, evaluates the left
//! side through the direct summations of [`crate::sums`] and the right side
//! through closed expressions in Bernoulli values, gcds and the ladder
//! counter, and reports both sides with their exact difference.

mod classical;
mod products;
mod three_term;

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::arith::Rational;
use crate::params::{convention, int, rat, InverseConvention, ParamList, ParamSpec, ParamValue, Reader};

pub use classical::{
    check_apostol, check_berndt, check_carlitz, check_dedekind, check_rademacher, check_rademacher_gcd,
    check_rademacher_three,
};
pub use products::{check_cor32, check_cor34, check_thm31, check_thm33};
pub use three_term::{check_cor42, check_cor43, check_cor45, check_thm41, check_thm44};

/// The identities that can be checked, with their command-line tags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    /// `s(a,b) + s(b,a)` for coprime positive `a, b`.
    Dedekind,
    /// Rademacher's three-term law for pairwise coprime positive `a, b, c`.
    RademacherThreeTerm,
    /// `s(a,b;x,y) + s(b,a;y,x)` for coprime positive `a, b`.
    Rademacher,
    /// The same law with the gcd correction, for any positive `a, b`.
    RademacherGcd,
    /// Berndt's three-term law for `s(a,b,c;x,y,z)`.
    Berndt,
    /// Apostol's law for `s_n(a,b)`, `n` odd.
    Apostol,
    /// Carlitz's law with the raw `B_n({·})` kernels.
    Carlitz,
    /// Expansion of `B̄_m(ax+y) B̄_n(bx+z)` into two-term sums.
    BernoulliProduct,
    /// The product expansion at an integer common argument.
    ProductIntegerShift,
    /// The derivative form of the product expansion.
    ProductDerivative,
    /// The derivative form at an integer common argument.
    DerivativeIntegerShift,
    /// Three-term law for the Hall–Wilson–Zagier sums.
    HwzThreeTerm,
    /// Two-term law for `s_n(a,b;x,y)` with no coprimality hypothesis.
    TwoTermN,
    /// Hall–Wilson law for `s_{j,p+1-j}(a,b,c)` with `p` odd.
    HallWilson,
    /// Derivative form of the Hall–Wilson–Zagier three-term law.
    HwzDerivative,
    /// Derivative form of the Hall–Wilson law.
    HallWilsonDerivative,
}

impl Identity {
    pub const ALL: [Identity; 16] = [
        Identity::Dedekind,
        Identity::RademacherThreeTerm,
        Identity::Rademacher,
        Identity::RademacherGcd,
        Identity::Berndt,
        Identity::Apostol,
        Identity::Carlitz,
        Identity::BernoulliProduct,
        Identity::ProductIntegerShift,
        Identity::ProductDerivative,
        Identity::DerivativeIntegerShift,
        Identity::HwzThreeTerm,
        Identity::TwoTermN,
        Identity::HallWilson,
        Identity::HwzDerivative,
        Identity::HallWilsonDerivative,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Identity::Dedekind => "dedekind",
            Identity::RademacherThreeTerm => "rademacher-three",
            Identity::Rademacher => "rademacher",
            Identity::RademacherGcd => "rademacher-gcd",
            Identity::Berndt => "berndt",
            Identity::Apostol => "apostol",
            Identity::Carlitz => "carlitz",
            Identity::BernoulliProduct => "thm31",
            Identity::ProductIntegerShift => "cor32",
            Identity::ProductDerivative => "thm33",
            Identity::DerivativeIntegerShift => "cor34",
            Identity::HwzThreeTerm => "thm41",
            Identity::TwoTermN => "cor42",
            Identity::HallWilson => "cor43",
            Identity::HwzDerivative => "thm44",
            Identity::HallWilsonDerivative => "cor45",
        }
    }

    /// Parameter names and kinds in their canonical order.
    pub fn params(self) -> &'static [ParamSpec] {
        const AB: &[ParamSpec] = &[int("a"), int("b")];
        const THREE: &[ParamSpec] = &[int("a"), int("b"), int("c"), convention("convention")];
        const ABXY: &[ParamSpec] = &[int("a"), int("b"), rat("x"), rat("y")];
        const ABCXYZ: &[ParamSpec] = &[int("a"), int("b"), int("c"), rat("x"), rat("y"), rat("z")];
        const NAB: &[ParamSpec] = &[int("n"), int("a"), int("b")];
        const NABXY: &[ParamSpec] = &[int("n"), int("a"), int("b"), rat("x"), rat("y")];
        const MNABXYZ: &[ParamSpec] = &[int("m"), int("n"), int("a"), int("b"), rat("x"), rat("y"), rat("z")];
        const MNABXY: &[ParamSpec] = &[int("m"), int("n"), int("a"), int("b"), rat("x"), rat("y")];
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
        const PRABC: &[ParamSpec] = &[int("p"), int("r"), int("a"), int("b"), int("c")];
        const MNABC: &[ParamSpec] = &[int("m"), int("n"), int("a"), int("b"), int("c")];
        match self {
            Identity::Dedekind => AB,
            Identity::RademacherThreeTerm => THREE,
            Identity::Rademacher | Identity::RademacherGcd => ABXY,
            Identity::Berndt => ABCXYZ,
            Identity::Apostol => NAB,
            Identity::Carlitz | Identity::TwoTermN => NABXY,
            Identity::BernoulliProduct | Identity::ProductDerivative => MNABXYZ,
            Identity::ProductIntegerShift | Identity::DerivativeIntegerShift => MNABXY,
            Identity::HwzThreeTerm | Identity::HwzDerivative => MNABCXYZ,
            Identity::HallWilson => PRABC,
            Identity::HallWilsonDerivative => MNABC,
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Identity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Identity::ALL
            .into_iter()
            .find(|id| id.tag() == s)
            .ok_or_else(|| format!("unknown identity {s:?}"))
    }
}

/// One instance of an identity: the identity and its full parameter tuple.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum IdentityCase {
    Dedekind {
        a: i64,
        b: i64,
    },
    RademacherThreeTerm {
        a: i64,
        b: i64,
        c: i64,
        convention: InverseConvention,
    },
    Rademacher {
        a: i64,
        b: i64,
        x: Rational,
        y: Rational,
    },
    RademacherGcd {
        a: i64,
        b: i64,
        x: Rational,
        y: Rational,
    },
    Berndt {
        a: i64,
        b: i64,
        c: i64,
        x: Rational,
        y: Rational,
        z: Rational,
    },
    Apostol {
        n: i64,
        a: i64,
        b: i64,
    },
    Carlitz {
        n: i64,
        a: i64,
        b: i64,
        x: Rational,
        y: Rational,
    },
    BernoulliProduct {
        m: i64,
        n: i64,
        a: i64,
        b: i64,
        x: Rational,
        y: Rational,
        z: Rational,
    },
    ProductIntegerShift {
        m: i64,
        n: i64,
        a: i64,
        b: i64,
        x: Rational,
        y: Rational,
    },
    ProductDerivative {
        m: i64,
        n: i64,
        a: i64,
        b: i64,
        x: Rational,
        y: Rational,
        z: Rational,
    },
    DerivativeIntegerShift {
        m: i64,
        n: i64,
        a: i64,
        b: i64,
        x: Rational,
        y: Rational,
    },
    HwzThreeTerm {
        m: i64,
        n: i64,
        a: i64,
        b: i64,
        c: i64,
        x: Rational,
        y: Rational,
        z: Rational,
    },
    TwoTermN {
        n: i64,
        a: i64,
        b: i64,
        x: Rational,
        y: Rational,
    },
    HallWilson {
        p: i64,
        r: i64,
        a: i64,
        b: i64,
        c: i64,
    },
    HwzDerivative {
        m: i64,
        n: i64,
        a: i64,
        b: i64,
        c: i64,
        x: Rational,
        y: Rational,
        z: Rational,
    },
    HallWilsonDerivative {
        m: i64,
        n: i64,
        a: i64,
        b: i64,
        c: i64,
    },
}

impl IdentityCase {
    pub fn identity(&self) -> Identity {
        match self {
            IdentityCase::Dedekind { .. } => Identity::Dedekind,
            IdentityCase::RademacherThreeTerm { .. } => Identity::RademacherThreeTerm,
            IdentityCase::Rademacher { .. } => Identity::Rademacher,
            IdentityCase::RademacherGcd { .. } => Identity::RademacherGcd,
            IdentityCase::Berndt { .. } => Identity::Berndt,
            IdentityCase::Apostol { .. } => Identity::Apostol,
            IdentityCase::Carlitz { .. } => Identity::Carlitz,
            IdentityCase::BernoulliProduct { .. } => Identity::BernoulliProduct,
            IdentityCase::ProductIntegerShift { .. } => Identity::ProductIntegerShift,
            IdentityCase::ProductDerivative { .. } => Identity::ProductDerivative,
            IdentityCase::DerivativeIntegerShift { .. } => Identity::DerivativeIntegerShift,
            IdentityCase::HwzThreeTerm { .. } => Identity::HwzThreeTerm,
            IdentityCase::TwoTermN { .. } => Identity::TwoTermN,
            IdentityCase::HallWilson { .. } => Identity::HallWilson,
            IdentityCase::HwzDerivative { .. } => Identity::HwzDerivative,
            IdentityCase::HallWilsonDerivative { .. } => Identity::HallWilsonDerivative,
        }
    }

    /// The parameter values in the order of [`Identity::params`].
    pub fn params(&self) -> ParamList {
        use ParamValue::{Int as I, Rational as R};
        let values: Vec<ParamValue> = match self {
            IdentityCase::Dedekind { a, b } => vec![I(*a), I(*b)],
            IdentityCase::RademacherThreeTerm { a, b, c, convention } => {
                vec![I(*a), I(*b), I(*c), ParamValue::Convention(*convention)]
            }
            IdentityCase::Rademacher { a, b, x, y } | IdentityCase::RademacherGcd { a, b, x, y } => {
                vec![I(*a), I(*b), R(x.clone()), R(y.clone())]
            }
            IdentityCase::Berndt { a, b, c, x, y, z } => {
                vec![I(*a), I(*b), I(*c), R(x.clone()), R(y.clone()), R(z.clone())]
            }
            IdentityCase::Apostol { n, a, b } => vec![I(*n), I(*a), I(*b)],
            IdentityCase::Carlitz { n, a, b, x, y } | IdentityCase::TwoTermN { n, a, b, x, y } => {
                vec![I(*n), I(*a), I(*b), R(x.clone()), R(y.clone())]
            }
            IdentityCase::BernoulliProduct { m, n, a, b, x, y, z }
            | IdentityCase::ProductDerivative { m, n, a, b, x, y, z } => {
                vec![I(*m), I(*n), I(*a), I(*b), R(x.clone()), R(y.clone()), R(z.clone())]
            }
            IdentityCase::ProductIntegerShift { m, n, a, b, x, y }
            | IdentityCase::DerivativeIntegerShift { m, n, a, b, x, y } => {
                vec![I(*m), I(*n), I(*a), I(*b), R(x.clone()), R(y.clone())]
            }
            IdentityCase::HwzThreeTerm { m, n, a, b, c, x, y, z }
            | IdentityCase::HwzDerivative { m, n, a, b, c, x, y, z } => vec![
                I(*m),
                I(*n),
                I(*a),
                I(*b),
                I(*c),
                R(x.clone()),
                R(y.clone()),
                R(z.clone()),
            ],
            IdentityCase::HallWilson { p, r, a, b, c } => vec![I(*p), I(*r), I(*a), I(*b), I(*c)],
            IdentityCase::HallWilsonDerivative { m, n, a, b, c } => {
                vec![I(*m), I(*n), I(*a), I(*b), I(*c)]
            }
        };
        let specs = self.identity().params();
        ParamList(specs.iter().map(|s| s.name).zip(values).collect())
    }

    /// Builds a case from values listed in the order of
    /// [`Identity::params`]. Returns `None` on a count or kind mismatch.
    pub fn from_params(identity: Identity, values: &[ParamValue]) -> Option<IdentityCase> {
        let mut r = Reader::new(values);
        let case = match identity {
            Identity::Dedekind => IdentityCase::Dedekind {
                a: r.int()?,
                b: r.int()?,
            },
            Identity::RademacherThreeTerm => IdentityCase::RademacherThreeTerm {
                a: r.int()?,
                b: r.int()?,
                c: r.int()?,
                convention: r.convention()?,
            },
            Identity::Rademacher => IdentityCase::Rademacher {
                a: r.int()?,
                b: r.int()?,
                x: r.rat()?,
                y: r.rat()?,
            },
            Identity::RademacherGcd => IdentityCase::RademacherGcd {
                a: r.int()?,
                b: r.int()?,
                x: r.rat()?,
                y: r.rat()?,
            },
            Identity::Berndt => IdentityCase::Berndt {
                a: r.int()?,
                b: r.int()?,
                c: r.int()?,
                x: r.rat()?,
                y: r.rat()?,
                z: r.rat()?,
            },
            Identity::Apostol => IdentityCase::Apostol {
                n: r.int()?,
                a: r.int()?,
                b: r.int()?,
            },
            Identity::Carlitz => IdentityCase::Carlitz {
                n: r.int()?,
                a: r.int()?,
                b: r.int()?,
                x: r.rat()?,
                y: r.rat()?,
            },
            Identity::BernoulliProduct => IdentityCase::BernoulliProduct {
                m: r.int()?,
                n: r.int()?,
                a: r.int()?,
                b: r.int()?,
                x: r.rat()?,
                y: r.rat()?,
                z: r.rat()?,
            },
            Identity::ProductIntegerShift => IdentityCase::ProductIntegerShift {
                m: r.int()?,
                n: r.int()?,
                a: r.int()?,
                b: r.int()?,
                x: r.rat()?,
                y: r.rat()?,
            },
            Identity::ProductDerivative => IdentityCase::ProductDerivative {
                m: r.int()?,
                n: r.int()?,
                a: r.int()?,
                b: r.int()?,
                x: r.rat()?,
                y: r.rat()?,
                z: r.rat()?,
            },
            Identity::DerivativeIntegerShift => IdentityCase::DerivativeIntegerShift {
                m: r.int()?,
                n: r.int()?,
                a: r.int()?,
                b: r.int()?,
                x: r.rat()?,
                y: r.rat()?,
            },
            Identity::HwzThreeTerm => IdentityCase::HwzThreeTerm {
                m: r.int()?,
                n: r.int()?,
                a: r.int()?,
                b: r.int()?,
                c: r.int()?,
                x: r.rat()?,
                y: r.rat()?,
                z: r.rat()?,
            },
            Identity::TwoTermN => IdentityCase::TwoTermN {
                n: r.int()?,
                a: r.int()?,
                b: r.int()?,
                x: r.rat()?,
                y: r.rat()?,
            },
            Identity::HallWilson => IdentityCase::HallWilson {
                p: r.int()?,
                r: r.int()?,
                a: r.int()?,
                b: r.int()?,
                c: r.int()?,
            },
            Identity::HwzDerivative => IdentityCase::HwzDerivative {
                m: r.int()?,
                n: r.int()?,
                a: r.int()?,
                b: r.int()?,
                c: r.int()?,
                x: r.rat()?,
                y: r.rat()?,
                z: r.rat()?,
            },
            Identity::HallWilsonDerivative => IdentityCase::HallWilsonDerivative {
                m: r.int()?,
                n: r.int()?,
                a: r.int()?,
                b: r.int()?,
                c: r.int()?,
            },
        };
        r.finish(case)
    }

    /// Checks the hypotheses of the identity, naming the first clause that
    /// fails.
    pub fn validate(&self) -> Result<(), ValidationError> {
        let id = self.identity();
        let mut v = Validator { identity: id };
        match self {
            IdentityCase::Dedekind { a, b } => {
                v.positive(&[("a ≥ 1", *a), ("b ≥ 1", *b)])?;
                v.coprime("gcd(a, b) = 1", *a, *b)
            }
            IdentityCase::RademacherThreeTerm { a, b, c, .. } => {
                v.positive(&[("a ≥ 1", *a), ("b ≥ 1", *b), ("c ≥ 1", *c)])?;
                v.coprime("gcd(a, b) = 1", *a, *b)?;
                v.coprime("gcd(b, c) = 1", *b, *c)?;
                v.coprime("gcd(c, a) = 1", *c, *a)
            }
            IdentityCase::Rademacher { a, b, .. } => {
                v.positive(&[("a ≥ 1", *a), ("b ≥ 1", *b)])?;
                v.coprime("gcd(a, b) = 1", *a, *b)
            }
            IdentityCase::RademacherGcd { a, b, .. } => v.positive(&[("a ≥ 1", *a), ("b ≥ 1", *b)]),
            IdentityCase::Berndt { a, b, c, .. } => v.positive(&[("a ≥ 1", *a), ("b ≥ 1", *b), ("c ≥ 1", *c)]),
            IdentityCase::Apostol { n, a, b } => {
                v.positive(&[("n ≥ 1", *n)])?;
                v.check(n % 2 == 1, "n odd")?;
                v.positive(&[("a ≥ 1", *a), ("b ≥ 1", *b)])?;
                v.coprime("gcd(a, b) = 1", *a, *b)
            }
            IdentityCase::Carlitz { n, a, b, .. } => {
                v.check(*n >= 0, "n ≥ 0")?;
                v.positive(&[("a ≥ 1", *a), ("b ≥ 1", *b)])?;
                v.coprime("gcd(a, b) = 1", *a, *b)
            }
            IdentityCase::BernoulliProduct { m, n, a, b, .. }
            | IdentityCase::ProductIntegerShift { m, n, a, b, .. }
            | IdentityCase::ProductDerivative { m, n, a, b, .. }
            | IdentityCase::DerivativeIntegerShift { m, n, a, b, .. } => {
                v.positive(&[("m ≥ 1", *m), ("n ≥ 1", *n)])?;
                v.nonzero(&[("a ≠ 0", *a), ("b ≠ 0", *b)])
            }
            IdentityCase::HwzThreeTerm { m, n, a, b, c, .. } | IdentityCase::HwzDerivative { m, n, a, b, c, .. } => {
                v.positive(&[("m ≥ 1", *m), ("n ≥ 1", *n)])?;
                v.nonzero(&[("a ≠ 0", *a), ("b ≠ 0", *b), ("c ≠ 0", *c)])
            }
            IdentityCase::TwoTermN { n, a, b, .. } => {
                v.check(*n >= 0, "n ≥ 0")?;
                v.positive(&[("a ≥ 1", *a), ("b ≥ 1", *b)])
            }
            IdentityCase::HallWilson { p, r, a, b, c } => {
                v.positive(&[("p ≥ 1", *p)])?;
                v.check(p % 2 == 1, "p odd")?;
                v.check((0..*p).contains(r), "0 ≤ r ≤ p - 1")?;
                v.positive(&[("a ≥ 1", *a), ("b ≥ 1", *b), ("c ≥ 1", *c)])
            }
            IdentityCase::HallWilsonDerivative { m, n, a, b, c } => v.positive(&[
                ("m ≥ 1", *m),
                ("n ≥ 1", *n),
                ("a ≥ 1", *a),
                ("b ≥ 1", *b),
                ("c ≥ 1", *c),
            ]),
        }
    }

    /// Validates the case and evaluates both sides exactly.
    pub fn check(&self) -> Result<IdentityReport, CheckError> {
        self.validate()?;
        let eval = match self {
            IdentityCase::Dedekind { a, b } => classical::dedekind(*a, *b)?,
            IdentityCase::RademacherThreeTerm { a, b, c, convention } => {
                classical::rademacher_three(*a, *b, *c, *convention)?
            }
            IdentityCase::Rademacher { a, b, x, y } | IdentityCase::RademacherGcd { a, b, x, y } => {
                classical::rademacher(*a, *b, x, y)?
            }
            IdentityCase::Berndt { a, b, c, x, y, z } => classical::berndt(*a, *b, *c, x, y, z)?,
            IdentityCase::Apostol { n, a, b } => classical::apostol(order(*n), *a, *b)?,
            IdentityCase::Carlitz { n, a, b, x, y } => classical::carlitz(order(*n), *a, *b, x, y)?,
            IdentityCase::BernoulliProduct { m, n, a, b, x, y, z } => {
                products::product(order(*m), order(*n), *a, *b, x, y, z)?
            }
            IdentityCase::ProductIntegerShift { m, n, a, b, x, y } => {
                products::product_integer_shift(order(*m), order(*n), *a, *b, x, y)?
            }
            IdentityCase::ProductDerivative { m, n, a, b, x, y, z } => {
                products::derivative(order(*m), order(*n), *a, *b, x, y, z)?
            }
            IdentityCase::DerivativeIntegerShift { m, n, a, b, x, y } => {
                products::derivative_integer_shift(order(*m), order(*n), *a, *b, x, y)?
            }
            IdentityCase::HwzThreeTerm { m, n, a, b, c, x, y, z } => {
                three_term::hwz(order(*m), order(*n), *a, *b, *c, x, y, z)?
            }
            IdentityCase::TwoTermN { n, a, b, x, y } => three_term::two_term_n(order(*n), *a, *b, x, y)?,
            IdentityCase::HallWilson { p, r, a, b, c } => three_term::hall_wilson(order(*p), order(*r), *a, *b, *c)?,
            IdentityCase::HwzDerivative { m, n, a, b, c, x, y, z } => {
                three_term::hwz_derivative(order(*m), order(*n), *a, *b, *c, x, y, z)?
            }
            IdentityCase::HallWilsonDerivative { m, n, a, b, c } => {
                three_term::hall_wilson_derivative(order(*m), order(*n), *a, *b, *c)?
            }
        };
        let residual = &eval.lhs - &eval.rhs;
        Ok(IdentityReport {
            case: self.clone(),
            pass: residual.is_zero(),
            lhs: eval.lhs,
            rhs: eval.rhs,
            residual,
            counter: eval.counter,
        })
    }
}

/// Orders are validated non-negative before evaluation.
fn order(v: i64) -> u32 {
    u32::try_from(v).expect("validated order fits in u32")
}

struct Validator {
    identity: Identity,
}

impl Validator {
    fn check(&mut self, cond: bool, clause: &'static str) -> Result<(), ValidationError> {
        if cond {
            Ok(())
        } else {
            Err(ValidationError {
                identity: self.identity,
                clause,
            })
        }
    }

    fn positive(&mut self, items: &[(&'static str, i64)]) -> Result<(), ValidationError> {
        items.iter().try_for_each(|&(clause, v)| self.check(v >= 1, clause))
    }

    fn nonzero(&mut self, items: &[(&'static str, i64)]) -> Result<(), ValidationError> {
        items.iter().try_for_each(|&(clause, v)| self.check(v != 0, clause))
    }

    fn coprime(&mut self, clause: &'static str, a: i64, b: i64) -> Result<(), ValidationError> {
        self.check(num_integer::gcd(a, b) == 1, clause)
    }
}

pub(crate) struct Evaluation {
    pub lhs: Rational,
    pub rhs: Rational,
    pub counter: Option<u64>,
}

impl Evaluation {
    pub(crate) fn new(lhs: Rational, rhs: Rational) -> Self {
        Evaluation {
            lhs,
            rhs,
            counter: None,
        }
    }

    pub(crate) fn with_counter(lhs: Rational, rhs: Rational, counter: u64) -> Self {
        Evaluation {
            lhs,
            rhs,
            counter: Some(counter),
        }
    }
}

/// Both sides of one identity instance and their exact difference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub case: IdentityCase,
    pub lhs: Rational,
    pub rhs: Rational,
    pub residual: Rational,
    pub pass: bool,
    /// The ladder count `N`, `Ñ` or `N̂` when the identity uses one.
    pub counter: Option<u64>,
}

impl Serialize for IdentityReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let len = if self.counter.is_some() { 7 } else { 6 };
        let mut st = serializer.serialize_struct("IdentityReport", len)?;
        st.serialize_field("identity", self.case.identity().tag())?;
        st.serialize_field("params", &self.case.params())?;
        st.serialize_field("lhs", &self.lhs)?;
        st.serialize_field("rhs", &self.rhs)?;
        st.serialize_field("residual", &self.residual)?;
        st.serialize_field("pass", &self.pass)?;
        if let Some(counter) = self.counter {
            st.serialize_field("counter", &counter)?;
        }
        st.end()
    }
}

/// A violated hypothesis, naming the failing clause.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{identity}: hypothesis violated: {clause}")]
pub struct ValidationError {
    pub identity: Identity,
    pub clause: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error(transparent)]
    Arith(#[from] crate::error::Error),
}

pub(crate) mod terms {
    //! Small exact building blocks shared by the right-hand sides.

    use crate::arith::{binomial, Rational};

    pub fn int(v: i64) -> Rational {
        Rational::from(v)
    }

    pub fn pow(base: i64, exp: i64) -> Rational {
        Rational::from(base).pow(exp as i32)
    }

    pub fn sgn(v: i64) -> Rational {
        Rational::from(v.signum())
    }

    pub fn neg_one_pow(exp: i64) -> Rational {
        if exp.rem_euclid(2) == 0 {
            Rational::ONE
        } else {
            -Rational::ONE
        }
    }

    pub fn choose(n: i64, k: i64) -> Rational {
        Rational::from(binomial(n, k).expect("n ≥ 0"))
    }

    pub fn factorial(n: i64) -> Rational {
        (1..=n).map(Rational::from).product()
    }

    pub fn kron(i: i64, j: i64) -> Rational {
        if i == j {
            Rational::ONE
        } else {
            Rational::ZERO
        }
    }

    /// 1 on the integers, 0 elsewhere.
    pub fn delta_int(x: &Rational) -> Rational {
        if x.is_integer() {
            Rational::ONE
        } else {
            Rational::ZERO
        }
    }

    pub fn gcd(a: i64, b: i64) -> i64 {
        num_integer::gcd(a, b)
    }
}
