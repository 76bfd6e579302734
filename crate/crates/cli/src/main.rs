mod render;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dedekind_core::analytic::TruncationTarget;
use dedekind_core::sweep::{self, Mode, Subject, SweepSpec};
use dedekind_core::{
    CheckError, Identity, IdentityCase, InverseConvention, ParamKind, ParamSpec, ParamValue, SumFamily, SumRequest,
};

use render::Format;

const EXIT_PASS: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Exact generalized Dedekind sums and mechanical checks of their
/// reciprocity laws.
#[derive(Debug, Parser)]
#[command(name = "dedekind", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one sum exactly and print it as a rational literal.
    Sum {
        /// Sum family: classical, rademacher, berndt3, apostol, carlitz, hwz,
        /// two-term-mn, two-term-n or plain-mn.
        family: SumFamily,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Check one identity case, printing a report.
    Verify {
        identity: Identity,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check an identity (or evaluate a sum) over a grid or seeded random tuples.
    ///
    /// Each parameter takes a domain, either through its own flag or through
    /// `--set name=domain`: an inclusive integer interval `lo..hi` or a
    /// comma-separated list of values.
    Sweep {
        /// Identity tag, or sum family tag with `--sum`.
        subject: String,
        /// Treat the subject as a sum family.
        #[arg(long)]
        sum: bool,
        /// Domain of one parameter, `name=domain`.
        #[arg(long = "set", value_name = "NAME=DOMAIN", allow_hyphen_values = true)]
        sets: Vec<String>,
        #[command(flatten)]
        params: ParamArgs,
        /// Draw this many random valid tuples instead of walking the grid.
        #[arg(long, value_name = "N")]
        random: Option<usize>,
        #[arg(long, default_value_t = 0, requires = "random")]
        seed: u64,
        /// Worker threads; defaults to $DEDEKIND_WORKERS, then the core count.
        #[arg(long, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
        jobs: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Truncate a convergent series and compare it with its closed form.
    Analytic {
        /// fourier, lemma24, lemma27 or zeta-even.
        target: TruncationTarget,
        #[command(flatten)]
        params: ParamArgs,
        /// Truncation point.
        #[arg(short = 'K', value_name = "K")]
        k: u64,
        /// Compare against this absolute tolerance instead of the tail bound.
        #[arg(long, value_name = "EPS")]
        tolerance: Option<f64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Debug, Default, Args)]
struct ParamArgs {
    #[arg(short, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(short, allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(short, allow_hyphen_values = true)]
    c: Option<String>,
    #[arg(short, allow_hyphen_values = true)]
    m: Option<String>,
    #[arg(short, allow_hyphen_values = true)]
    n: Option<String>,
    #[arg(short, allow_hyphen_values = true)]
    p: Option<String>,
    #[arg(short, allow_hyphen_values = true)]
    r: Option<String>,
    #[arg(short, allow_hyphen_values = true)]
    j: Option<String>,
    #[arg(short, allow_hyphen_values = true)]
    x: Option<String>,
    #[arg(short, allow_hyphen_values = true)]
    y: Option<String>,
    #[arg(short, allow_hyphen_values = true)]
    z: Option<String>,
    /// Inverse convention for the three-term law: strong (default) or dieter.
    #[arg(long)]
    convention: Option<String>,
}

impl ParamArgs {
    fn given(&self) -> Vec<(&'static str, &str)> {
        [
            ("a", &self.a),
            ("b", &self.b),
            ("c", &self.c),
            ("m", &self.m),
            ("n", &self.n),
            ("p", &self.p),
            ("r", &self.r),
            ("j", &self.j),
            ("x", &self.x),
            ("y", &self.y),
            ("z", &self.z),
            ("convention", &self.convention),
        ]
        .into_iter()
        .filter_map(|(name, v)| v.as_deref().map(|v| (name, v)))
        .collect()
    }

    /// Rejects flags the subject does not take.
    fn check_names(&self, subject: &str, specs: &[ParamSpec]) -> Result<(), String> {
        match self
            .given()
            .into_iter()
            .find(|(name, _)| !specs.iter().any(|s| s.name == *name))
        {
            Some((name, _)) => Err(format!("{subject} takes no parameter {name}")),
            None => Ok(()),
        }
    }

    /// Parses one value per parameter, in declared order.
    fn values(&self, subject: &str, specs: &[ParamSpec]) -> Result<Vec<ParamValue>, String> {
        self.check_names(subject, specs)?;
        let given = self.given();
        specs
            .iter()
            .map(|spec| {
                let text = given.iter().find(|(name, _)| *name == spec.name).map(|(_, v)| *v);
                let text = match (text, spec.kind) {
                    (Some(text), _) => text,
                    (None, ParamKind::Convention) => InverseConvention::Strong.as_str(),
                    (None, _) => return Err(format!("{subject} needs parameter {}", spec.name)),
                };
                ParamValue::parse(spec.kind, text).map_err(|e| format!("parameter {}: {e}", spec.name))
            })
            .collect()
    }
}

struct Failure(u8, String);

fn usage(msg: impl Into<String>) -> Failure {
    Failure(EXIT_USAGE, msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(code), Ok(())) => ExitCode::from(code),
        (Err(Failure(code, msg)), _) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
        (Ok(_), Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_FAIL)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> Result<u8, Failure> {
    let io_err = |e: io::Error| Failure(EXIT_FAIL, e.to_string());
    match command {
        Command::Sum { family, params, format } => {
            let values = params.values(family.tag(), family.params()).map_err(usage)?;
            let request = SumRequest::from_params(family, &values).map_err(usage)?;
            let value = request.evaluate().map_err(|e| usage(e.to_string()))?;
            render::sum(out, format, &request, &value, true).map_err(io_err)?;
            Ok(EXIT_PASS)
        }
        Command::Verify {
            identity,
            params,
            format,
        } => {
            let values = params.values(identity.tag(), identity.params()).map_err(usage)?;
            let case = IdentityCase::from_params(identity, &values)
                .ok_or_else(|| usage(format!("{identity}: malformed parameters")))?;
            let report = case.check().map_err(|e| match e {
                CheckError::Validation(v) => usage(v.to_string()),
                other => Failure(EXIT_FAIL, other.to_string()),
            })?;
            render::report(out, format, &report, true).map_err(io_err)?;
            Ok(if report.pass { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Sweep {
            subject,
            sum,
            sets,
            params,
            random,
            seed,
            jobs,
            format,
        } => {
            let subject = Subject::parse(&subject, sum).map_err(usage)?;
            let mode = match random {
                Some(count) => Mode::Random { count, seed },
                None => Mode::Grid,
            };
            let spec = sweep_spec(subject, mode, &params, &sets).map_err(usage)?;
            let workers = jobs.map_or_else(sweep::default_workers, |n| n as usize);
            let result = sweep::run(&spec, workers).map_err(usage)?;
            render::sweep(out, format, subject, &result).map_err(io_err)?;
            Ok(if result.failures() == 0 { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Analytic {
            target,
            params,
            k,
            tolerance,
            format,
        } => {
            let values = params.values(target.tag(), target.params()).map_err(usage)?;
            let mut report = target.run(&values, k).map_err(|e| usage(e.to_string()))?;
            if let Some(eps) = tolerance {
                if !(eps.is_finite() && eps >= 0.0) {
                    return Err(usage("--tolerance must be a finite non-negative number"));
                }
                report.tolerance = eps;
                report.pass = report.abs_error <= eps;
            }
            render::truncation(out, format, &report).map_err(io_err)?;
            Ok(if report.pass { EXIT_PASS } else { EXIT_FAIL })
        }
    }
}

fn sweep_spec(subject: Subject, mode: Mode, params: &ParamArgs, sets: &[String]) -> Result<SweepSpec, String> {
    let name = subject.to_string();
    params.check_names(&name, subject.params())?;
    let mut spec = SweepSpec::new(subject, mode);
    let mut seen: Vec<&str> = Vec::new();
    let from_sets = sets.iter().map(|s| {
        s.split_once('=')
            .map(|(k, v)| (k.trim(), v))
            .ok_or_else(|| format!("--set expects name=domain, got {s:?}"))
    });
    for entry in params.given().into_iter().map(Ok).chain(from_sets) {
        let (key, domain) = entry?;
        if seen.contains(&key) {
            return Err(format!("parameter {key} given more than once"));
        }
        seen.push(key);
        spec.set(key, domain)?;
    }
    Ok(spec)
}
