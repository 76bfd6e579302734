use thiserror::Error;

/// Errors raised by the exact-arithmetic kernels, the sum families and the
/// analytic checks when an argument falls outside an operation's domain.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{op} requires {requirement}")]
    Domain {
        op: &'static str,
        requirement: &'static str,
    },
    #[error("{a} has no inverse modulo {modulus}")]
    NoInverse { a: i64, modulus: i64 },
    #[error("invalid rational literal {0:?} (expected [-]digits[/digits])")]
    ParseRational(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(op: &'static str, requirement: &'static str) -> Error {
    Error::Domain { op, requirement }
}

pub(crate) fn ensure(cond: bool, op: &'static str, requirement: &'static str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(domain(op, requirement))
    }
}
