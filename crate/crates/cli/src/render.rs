use std::io::{self, Write};

use clap::ValueEnum;
use dedekind_core::analytic::TruncationReport;
use dedekind_core::sweep::{Outcome, Subject, SweepResult};
use dedekind_core::{IdentityReport, ParamList, Rational, SumRequest};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Serialize)]
struct SumRecord<'a> {
    family: &'static str,
    params: ParamList,
    value: &'a Rational,
}

#[derive(Serialize)]
struct ErrorRecord<'a> {
    params: &'a ParamList,
    error: &'a str,
}

#[derive(Serialize)]
struct Summary {
    cases: usize,
    passes: usize,
    failures: usize,
    skipped: usize,
}

#[derive(Serialize)]
struct SummaryRecord {
    summary: Summary,
}

fn json_line<T: Serialize>(out: &mut impl Write, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

fn csv_row<I: IntoIterator<Item = String>>(out: &mut impl Write, cells: I) -> io::Result<()> {
    let cells: Vec<String> = cells.into_iter().collect();
    writeln!(out, "{}", cells.join(","))
}

fn param_names(params: &ParamList) -> impl Iterator<Item = String> + '_ {
    params.iter().map(|(name, _)| name.to_string())
}

fn param_values(params: &ParamList) -> impl Iterator<Item = String> + '_ {
    params.iter().map(|(_, v)| v.to_string())
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn sum(
    out: &mut impl Write,
    format: Format,
    request: &SumRequest,
    value: &Rational,
    header: bool,
) -> io::Result<()> {
    let params = request.params();
    match format {
        Format::Plain => writeln!(out, "{value}"),
        Format::Json => json_line(
            out,
            &SumRecord {
                family: request.family().tag(),
                params,
                value,
            },
        ),
        Format::Csv => {
            if header {
                let names = param_names(&params);
                csv_row(
                    out,
                    std::iter::once("family".into()).chain(names).chain(["value".into()]),
                )?;
            }
            let values = param_values(&params);
            csv_row(
                out,
                std::iter::once(request.family().tag().to_string())
                    .chain(values)
                    .chain([value.to_string()]),
            )
        }
    }
}

pub fn report(out: &mut impl Write, format: Format, report: &IdentityReport, header: bool) -> io::Result<()> {
    let params = report.case.params();
    let counter = report.counter.map(|c| c.to_string()).unwrap_or_default();
    match format {
        Format::Json => json_line(out, report),
        Format::Plain => {
            write!(
                out,
                "{} {params}: lhs={} rhs={} residual={}",
                report.case.identity(),
                report.lhs,
                report.rhs,
                report.residual
            )?;
            if let Some(c) = report.counter {
                write!(out, " counter={c}")?;
            }
            writeln!(out, " {}", verdict(report.pass))
        }
        Format::Csv => {
            if header {
                let names = param_names(&params);
                let tail = ["lhs", "rhs", "residual", "pass", "counter"].map(String::from);
                csv_row(out, std::iter::once("identity".into()).chain(names).chain(tail))?;
            }
            let values = param_values(&params);
            let tail = [
                report.lhs.to_string(),
                report.rhs.to_string(),
                report.residual.to_string(),
                report.pass.to_string(),
                counter,
            ];
            csv_row(
                out,
                std::iter::once(report.case.identity().to_string())
                    .chain(values)
                    .chain(tail),
            )
        }
    }
}

pub fn truncation(out: &mut impl Write, format: Format, report: &TruncationReport) -> io::Result<()> {
    let tag = report.target.tag();
    match format {
        Format::Json => json_line(out, report),
        Format::Plain => writeln!(
            out,
            "{tag} {} K={}: approx={}{:+}i reference={}{:+}i abs_error={:e} tolerance={:e} {}",
            report.params,
            report.k,
            report.approx.re,
            report.approx.im,
            report.reference.re,
            report.reference.im,
            report.abs_error,
            report.tolerance,
            verdict(report.pass)
        ),
        Format::Csv => {
            let head = ["target".to_string()];
            let tail = [
                "K",
                "approx_re",
                "approx_im",
                "reference_re",
                "reference_im",
                "abs_error",
                "tolerance",
                "pass",
            ]
            .map(String::from);
            csv_row(out, head.into_iter().chain(param_names(&report.params)).chain(tail))?;
            let tail = [
                report.k.to_string(),
                report.approx.re.to_string(),
                report.approx.im.to_string(),
                report.reference.re.to_string(),
                report.reference.im.to_string(),
                report.abs_error.to_string(),
                report.tolerance.to_string(),
                report.pass.to_string(),
            ];
            csv_row(
                out,
                [tag.to_string()]
                    .into_iter()
                    .chain(param_values(&report.params))
                    .chain(tail),
            )
        }
    }
}

fn error(out: &mut impl Write, format: Format, subject: Subject, params: &ParamList, message: &str) -> io::Result<()> {
    match format {
        Format::Json => json_line(out, &ErrorRecord { params, error: message }),
        Format::Plain => writeln!(out, "{subject} {params}: error: {message}"),
        Format::Csv => writeln!(out, "# {subject} {params}: error: {message}"),
    }
}

pub fn sweep(out: &mut impl Write, format: Format, subject: Subject, result: &SweepResult) -> io::Result<()> {
    for (i, outcome) in result.outcomes.iter().enumerate() {
        let header = i == 0;
        match outcome {
            Outcome::Identity(r) => report(out, format, r, header)?,
            Outcome::Sum { request, value } => sum(out, format, request, value, header)?,
            Outcome::Error { params, message } => error(out, format, subject, params, message)?,
        }
    }
    let summary = Summary {
        cases: result.outcomes.len(),
        passes: result.passes(),
        failures: result.failures(),
        skipped: result.skipped,
    };
    match format {
        Format::Json => json_line(out, &SummaryRecord { summary }),
        Format::Plain | Format::Csv => {
            let prefix = if format == Format::Csv { "# " } else { "" };
            writeln!(
                out,
                "{prefix}cases={} passes={} failures={} skipped={}",
                summary.cases, summary.passes, summary.failures, summary.skipped
            )
        }
    }
}
