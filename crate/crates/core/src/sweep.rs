//! Grid and seeded-random sweeps over identity cases or sum requests.
//!
//! Grids enumerate the Cartesian product of the declared domains
//! lexicographically in parameter order, first parameter outermost. Tuples
//! that violate a hypothesis (or a sum's domain) are skipped and counted.
//! Random sweeps draw every parameter independently from a ChaCha stream
//! seeded by the caller and redraw the whole tuple when it is invalid.
//! Cases are evaluated on a worker pool and returned in enumeration order.

use std::fmt;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::Rational;
use crate::params::{InverseConvention, ParamKind, ParamList, ParamSpec, ParamValue};
use crate::reciprocity::{Identity, IdentityCase, IdentityReport};
use crate::sums::{SumFamily, SumRequest};

/// Environment variable that overrides the worker count.
pub const WORKERS_ENV: &str = "DEDEKIND_WORKERS";

/// Redraws allowed per random tuple before the sweep gives up.
pub const MAX_REDRAWS: usize = 100_000;

/// What a sweep evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subject {
    Identity(Identity),
    Sum(SumFamily),
}

impl Subject {
    pub fn params(self) -> &'static [ParamSpec] {
        match self {
            Subject::Identity(id) => id.params(),
            Subject::Sum(family) => family.params(),
        }
    }

    pub fn parse(tag: &str, sum: bool) -> Result<Subject, String> {
        if sum {
            tag.parse().map(Subject::Sum)
        } else {
            tag.parse().map(Subject::Identity)
        }
    }
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Identity(id) => f.write_str(id.tag()),
            Subject::Sum(family) => f.write_str(family.tag()),
        }
    }
}

/// The values one parameter ranges over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Domain(pub Vec<ParamValue>);

impl Domain {
    /// Parses `lo..hi` (inclusive, integers only) or a comma-separated list.
    pub fn parse(kind: ParamKind, spec: &str) -> Result<Domain, String> {
        let spec = spec.trim();
        if kind == ParamKind::Int {
            if let Some((lo, hi)) = spec.split_once("..") {
                let bound = |s: &str| {
                    s.trim()
                        .parse::<i64>()
                        .map_err(|_| format!("invalid interval bound {s:?} in {spec:?}"))
                };
                let (lo, hi) = (bound(lo)?, bound(hi)?);
                if lo > hi {
                    return Err(format!("empty interval {spec:?}"));
                }
                return Ok(Domain((lo..=hi).map(ParamValue::Int).collect()));
            }
        }
        let values = spec
            .split(',')
            .map(|item| ParamValue::parse(kind, item.trim()))
            .collect::<Result<Vec<_>, _>>()?;
        if values.is_empty() {
            return Err(format!("empty domain {spec:?}"));
        }
        Ok(Domain(values))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Grid,
    Random { count: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSpec {
    pub subject: Subject,
    /// One optional domain per parameter, in declared order.
    pub domains: Vec<Option<Domain>>,
    pub mode: Mode,
}

impl SweepSpec {
    pub fn new(subject: Subject, mode: Mode) -> Self {
        SweepSpec {
            subject,
            domains: vec![None; subject.params().len()],
            mode,
        }
    }

    /// Sets the domain of the named parameter from its textual spec.
    pub fn set(&mut self, name: &str, spec: &str) -> Result<(), String> {
        let params = self.subject.params();
        let idx = params
            .iter()
            .position(|p| p.name == name)
            .ok_or_else(|| format!("{} has no parameter {name:?}", self.subject))?;
        self.domains[idx] = Some(Domain::parse(params[idx].kind, spec)?);
        Ok(())
    }

    /// The tuples to evaluate, in order, plus the number of invalid grid
    /// tuples that were skipped.
    pub fn cases(&self) -> Result<(Vec<Case>, usize), String> {
        match self.mode {
            Mode::Grid => self.grid(),
            Mode::Random { count, seed } => self.random(count, seed).map(|c| (c, 0)),
        }
    }

    fn grid(&self) -> Result<(Vec<Case>, usize), String> {
        let params = self.subject.params();
        let domains: Vec<&Domain> = params
            .iter()
            .zip(&self.domains)
            .map(|(p, d)| {
                d.as_ref()
                    .ok_or_else(|| format!("no domain given for parameter {}", p.name))
            })
            .collect::<Result<_, _>>()?;
        let mut cases = Vec::new();
        let mut skipped = 0;
        let mut index = vec![0usize; domains.len()];
        loop {
            let tuple: Vec<ParamValue> = index.iter().zip(&domains).map(|(&i, d)| d.0[i].clone()).collect();
            match Case::build(self.subject, &tuple) {
                Some(case) => cases.push(case),
                None => skipped += 1,
            }
            // odometer with the last parameter varying fastest
            let mut pos = domains.len();
            loop {
                if pos == 0 {
                    return Ok((cases, skipped));
                }
                pos -= 1;
                index[pos] += 1;
                if index[pos] < domains[pos].0.len() {
                    break;
                }
                index[pos] = 0;
            }
        }
    }

    fn random(&self, count: usize, seed: u64) -> Result<Vec<Case>, String> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let params = self.subject.params();
        let mut cases = Vec::with_capacity(count);
        for _ in 0..count {
            let mut attempts = 0;
            let case = loop {
                let tuple: Vec<ParamValue> = params
                    .iter()
                    .zip(&self.domains)
                    .map(|(p, d)| draw(&mut rng, p, d.as_ref()))
                    .collect();
                if let Some(case) = Case::build(self.subject, &tuple) {
                    break case;
                }
                attempts += 1;
                if attempts >= MAX_REDRAWS {
                    return Err(format!("no valid {} tuple found in {MAX_REDRAWS} draws", self.subject));
                }
            };
            cases.push(case);
        }
        Ok(cases)
    }
}

/// Default integer range for parameters drawn without a declared domain.
fn default_int_range(name: &str) -> std::ops::RangeInclusive<i64> {
    match name {
        "m" | "n" | "p" | "r" | "j" => 0..=4,
        _ => -6..=6,
    }
}

fn draw(rng: &mut ChaCha8Rng, spec: &ParamSpec, domain: Option<&Domain>) -> ParamValue {
    if let Some(domain) = domain {
        return domain.0.choose(rng).expect("domains are non-empty").clone();
    }
    match spec.kind {
        ParamKind::Int => ParamValue::Int(rng.random_range(default_int_range(spec.name))),
        ParamKind::Rational => ParamValue::Rational(random_rational(rng)),
        ParamKind::Convention => ParamValue::Convention(*InverseConvention::ALL.choose(rng).expect("non-empty")),
    }
}

/// A rational with numerator uniform in `[-9, 9]` and denominator uniform in
/// `[1, 9]`, reduced.
pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(rng.random_range(-9..=9), rng.random_range(1..=9)).expect("nonzero denominator")
}

/// One valid tuple of a sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Case {
    Identity(IdentityCase),
    Sum(SumRequest),
}

impl Case {
    /// Builds a case if the tuple is well-formed and satisfies the
    /// subject's hypotheses.
    pub fn build(subject: Subject, tuple: &[ParamValue]) -> Option<Case> {
        match subject {
            Subject::Identity(id) => {
                let case = IdentityCase::from_params(id, tuple)?;
                case.validate().ok()?;
                Some(Case::Identity(case))
            }
            Subject::Sum(family) => {
                let request = SumRequest::from_params(family, tuple).ok()?;
                request.in_domain().then_some(Case::Sum(request))
            }
        }
    }

    pub fn params(&self) -> ParamList {
        match self {
            Case::Identity(case) => case.params(),
            Case::Sum(request) => request.params(),
        }
    }

    pub fn evaluate(&self) -> Outcome {
        match self {
            Case::Identity(case) => match case.check() {
                Ok(report) => Outcome::Identity(report),
                Err(err) => Outcome::Error {
                    params: case.params(),
                    message: err.to_string(),
                },
            },
            Case::Sum(request) => match request.evaluate() {
                Ok(value) => Outcome::Sum {
                    request: request.clone(),
                    value,
                },
                Err(err) => Outcome::Error {
                    params: request.params(),
                    message: err.to_string(),
                },
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Identity(IdentityReport),
    Sum { request: SumRequest, value: Rational },
    Error { params: ParamList, message: String },
}

impl Outcome {
    pub fn passed(&self) -> bool {
        match self {
            Outcome::Identity(report) => report.pass,
            Outcome::Sum { .. } => true,
            Outcome::Error { .. } => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepResult {
    pub outcomes: Vec<Outcome>,
    pub skipped: usize,
}

impl SweepResult {
    pub fn passes(&self) -> usize {
        self.outcomes.iter().filter(|o| o.passed()).count()
    }

    pub fn failures(&self) -> usize {
        self.outcomes.len() - self.passes()
    }
}

/// Worker count from the environment, falling back to the available
/// parallelism.
pub fn default_workers() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// Evaluates `cases` on `workers` threads, keeping their order.
pub fn evaluate_all(cases: &[Case], workers: usize) -> Vec<Outcome> {
    if workers <= 1 {
        return cases.iter().map(Case::evaluate).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(|| cases.par_iter().map(Case::evaluate).collect()),
        Err(_) => cases.iter().map(Case::evaluate).collect(),
    }
}

/// Enumerates and evaluates a sweep.
pub fn run(spec: &SweepSpec, workers: usize) -> Result<SweepResult, String> {
    let (cases, skipped) = spec.cases()?;
    Ok(SweepResult {
        outcomes: evaluate_all(&cases, workers),
        skipped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identity_spec(id: Identity, sets: &[(&str, &str)], mode: Mode) -> SweepSpec {
        let mut spec = SweepSpec::new(Subject::Identity(id), mode);
        for (name, domain) in sets {
            spec.set(name, domain).unwrap();
        }
        spec
    }

    #[test]
    fn domains_parse() {
        assert_eq!(
            Domain::parse(ParamKind::Int, "-2..1").unwrap().0,
            vec![
                ParamValue::Int(-2),
                ParamValue::Int(-1),
                ParamValue::Int(0),
                ParamValue::Int(1)
            ]
        );
        assert_eq!(
            Domain::parse(ParamKind::Int, "3, -3").unwrap().0,
            vec![ParamValue::Int(3), ParamValue::Int(-3)]
        );
        let rats = Domain::parse(ParamKind::Rational, "0,1/2,-7/3").unwrap();
        assert_eq!(rats.0[2], ParamValue::Rational("-7/3".parse().unwrap()));
        assert!(Domain::parse(ParamKind::Int, "3..1").is_err());
        assert!(Domain::parse(ParamKind::Rational, "0.5").is_err());
        assert!(Domain::parse(ParamKind::Int, "1..x").is_err());
        assert!(Domain::parse(ParamKind::Convention, "strong,dieter").is_ok());
    }

    #[test]
    fn grid_is_lexicographic_and_skips_invalid() {
        let spec = identity_spec(Identity::Dedekind, &[("a", "1..3"), ("b", "2..4")], Mode::Grid);
        let (cases, skipped) = spec.cases().unwrap();
        let pairs: Vec<String> = cases.iter().map(|c| c.params().to_string()).collect();
        assert_eq!(
            pairs,
            ["a=1 b=2", "a=1 b=3", "a=1 b=4", "a=2 b=3", "a=3 b=2", "a=3 b=4"]
        );
        assert_eq!(skipped, 3);
    }

    #[test]
    fn grid_needs_every_domain() {
        let spec = identity_spec(Identity::Dedekind, &[("a", "1..3")], Mode::Grid);
        assert!(spec.cases().is_err());
        let mut spec = SweepSpec::new(Subject::Identity(Identity::Dedekind), Mode::Grid);
        assert!(spec.set("z", "1").is_err());
    }

    #[test]
    fn random_draws_are_seeded_and_valid() {
        let mode = Mode::Random { count: 50, seed: 7 };
        let spec = identity_spec(Identity::HallWilson, &[], mode);
        let (first, _) = spec.cases().unwrap();
        let (second, _) = spec.cases().unwrap();
        assert_eq!(first, second);
        assert_eq!(first.len(), 50);
        let other = identity_spec(Identity::HallWilson, &[], Mode::Random { count: 50, seed: 8 });
        assert_ne!(other.cases().unwrap().0, first);
        for case in &first {
            let Case::Identity(case) = case else { panic!() };
            assert!(case.validate().is_ok());
        }
    }

    #[test]
    fn random_respects_declared_domains() {
        let spec = identity_spec(
            Identity::Carlitz,
            &[("n", "2"), ("x", "1/2,1/3")],
            Mode::Random { count: 40, seed: 1 },
        );
        for case in spec.cases().unwrap().0 {
            let Case::Identity(IdentityCase::Carlitz { n, x, .. }) = case else {
                panic!()
            };
            assert_eq!(n, 2);
            assert!(x == "1/2".parse().unwrap() || x == "1/3".parse().unwrap());
        }
    }

    #[test]
    fn random_rationals_stay_in_range() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..500 {
            let q = random_rational(&mut rng);
            assert!(q.abs() <= Rational::from(9i64));
            let den = num_traits::ToPrimitive::to_i64(&q.denom()).unwrap();
            assert!((1..=9).contains(&den));
        }
    }

    #[test]
    fn order_is_kept_across_workers() {
        let spec = identity_spec(
            Identity::BernoulliProduct,
            &[
                ("m", "1..2"),
                ("n", "1..2"),
                ("a", "-2..2"),
                ("b", "-2..2"),
                ("x", "0,1/2"),
                ("y", "1/3"),
                ("z", "0"),
            ],
            Mode::Grid,
        );
        let serial = run(&spec, 1).unwrap();
        let parallel = run(&spec, 3).unwrap();
        assert_eq!(serial, parallel);
        assert_eq!(serial.failures(), 0);
        assert_eq!(serial.skipped, 2 * 2 * 9 * 2);
    }

    #[test]
    fn sum_sweeps_skip_zero_moduli() {
        let mut spec = SweepSpec::new(Subject::Sum(SumFamily::Classical), Mode::Grid);
        spec.set("a", "1..2").unwrap();
        spec.set("b", "-1..1").unwrap();
        let result = run(&spec, 1).unwrap();
        assert_eq!((result.outcomes.len(), result.skipped), (4, 2));
        assert_eq!(result.failures(), 0);
    }
}
