//! Exact evaluation of generalized Dedekind sums and verification of their
//! reciprocity laws.

pub mod analytic;
pub mod arith;
pub mod bernoulli;
pub mod error;
pub mod params;
pub mod reciprocity;
pub mod sums;
pub mod sweep;

pub use arith::{binomial, gcd_pos, mod_inverse, Integer, Rational};
pub use bernoulli::{bernoulli_function, bernoulli_number, bernoulli_poly, bernoulli_poly_frac, sawtooth};
pub use error::{Error, Result};
pub use params::{InverseConvention, ParamKind, ParamList, ParamSpec, ParamValue};
pub use reciprocity::{CheckError, Identity, IdentityCase, IdentityReport, ValidationError};
pub use sums::{count_ladder, SumFamily, SumRequest};
