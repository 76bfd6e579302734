//! Named, typed parameter tuples shared by identity cases, sum requests and
//! sweeps.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::arith::Rational;

/// How the inverses in the three-term Rademacher law are chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InverseConvention {
    /// `a' ≡ a⁻¹ (mod bc)`, `b' ≡ b⁻¹ (mod ca)`, `c' ≡ c⁻¹ (mod ab)`.
    Strong,
    /// Dieter's weaker congruences `a' ≡ a⁻¹ (mod b)`, `b' ≡ b⁻¹ (mod c)`,
    /// `c' ≡ c⁻¹ (mod a)`.
    Dieter,
}

impl InverseConvention {
    pub const ALL: [InverseConvention; 2] = [InverseConvention::Strong, InverseConvention::Dieter];

    pub fn as_str(self) -> &'static str {
        match self {
            InverseConvention::Strong => "strong",
            InverseConvention::Dieter => "dieter",
        }
    }
}

impl fmt::Display for InverseConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for InverseConvention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "strong" => Ok(InverseConvention::Strong),
            "dieter" => Ok(InverseConvention::Dieter),
            other => Err(format!(
                "unknown inverse convention {other:?} (expected strong or dieter)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    Int,
    Rational,
    Convention,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub kind: ParamKind,
}

pub(crate) const fn int(name: &'static str) -> ParamSpec {
    ParamSpec {
        name,
        kind: ParamKind::Int,
    }
}

pub(crate) const fn rat(name: &'static str) -> ParamSpec {
    ParamSpec {
        name,
        kind: ParamKind::Rational,
    }
}

pub(crate) const fn convention(name: &'static str) -> ParamSpec {
    ParamSpec {
        name,
        kind: ParamKind::Convention,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ParamValue {
    Int(i64),
    Rational(Rational),
    Convention(InverseConvention),
}

impl ParamValue {
    pub fn kind(&self) -> ParamKind {
        match self {
            ParamValue::Int(_) => ParamKind::Int,
            ParamValue::Rational(_) => ParamKind::Rational,
            ParamValue::Convention(_) => ParamKind::Convention,
        }
    }

    /// Parses a literal of the given kind.
    pub fn parse(kind: ParamKind, s: &str) -> Result<Self, String> {
        match kind {
            ParamKind::Int => s
                .parse::<i64>()
                .map(ParamValue::Int)
                .map_err(|_| format!("invalid integer {s:?}")),
            ParamKind::Rational => s
                .parse::<Rational>()
                .map(ParamValue::Rational)
                .map_err(|e| e.to_string()),
            ParamKind::Convention => s.parse().map(ParamValue::Convention),
        }
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::Rational(v) => write!(f, "{v}"),
            ParamValue::Convention(v) => write!(f, "{v}"),
        }
    }
}

impl Serialize for ParamValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            ParamValue::Int(v) => serializer.serialize_i64(*v),
            ParamValue::Rational(v) => v.serialize(serializer),
            ParamValue::Convention(v) => serializer.serialize_str(v.as_str()),
        }
    }
}

/// An ordered list of named parameter values, serialized as a JSON object
/// whose keys keep the declared order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamList(pub Vec<(&'static str, ParamValue)>);

impl ParamList {
    pub fn iter(&self) -> impl Iterator<Item = &(&'static str, ParamValue)> {
        self.0.iter()
    }
}

impl Serialize for ParamList {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (name, value) in &self.0 {
            map.serialize_entry(name, value)?;
        }
        map.end()
    }
}

impl fmt::Display for ParamList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (name, value)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{name}={value}")?;
        }
        Ok(())
    }
}

/// Pulls typed values back out of a positional slice, checking kinds.
pub(crate) struct Reader<'a> {
    values: std::slice::Iter<'a, ParamValue>,
}

impl<'a> Reader<'a> {
    pub(crate) fn new(values: &'a [ParamValue]) -> Self {
        Reader { values: values.iter() }
    }

    pub(crate) fn int(&mut self) -> Option<i64> {
        match self.values.next()? {
            ParamValue::Int(v) => Some(*v),
            _ => None,
        }
    }

    pub(crate) fn rat(&mut self) -> Option<Rational> {
        match self.values.next()? {
            ParamValue::Rational(v) => Some(v.clone()),
            _ => None,
        }
    }

    pub(crate) fn convention(&mut self) -> Option<InverseConvention> {
        match self.values.next()? {
            ParamValue::Convention(v) => Some(*v),
            _ => None,
        }
    }

    pub(crate) fn finish<T>(mut self, value: T) -> Option<T> {
        self.values.next().is_none().then_some(value)
    }
}
