//! Coefficient types: exact rationals and `f64`.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational coefficients in lowest terms with a positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScalarKind {
    Rational,
    F64,
}

/// Relative tolerance used when comparing `f64` results.
pub const FLOAT_REL_TOL: f64 = 1e-9;
/// Absolute tolerance used near zero when comparing `f64` results.
pub const FLOAT_ABS_TOL: f64 = 1e-12;

/// A field of characteristic zero, or a floating point stand-in for one.
pub trait Scalar:
    Clone + Debug + Display + PartialOrd + Signed + FromPrimitive + Send + Sync + 'static
{
    const KIND: ScalarKind;

    fn from_rational(value: &Rational) -> Self;

    /// Parses an unsigned decimal literal such as `12.375`.
    fn parse_decimal(text: &str) -> Result<Self>;

    /// Exact equality for rationals, tolerance-based equality for floats.
    fn close_to(&self, other: &Self) -> bool;

    fn is_exact() -> bool {
        Self::KIND == ScalarKind::Rational
    }
}

impl Scalar for Rational {
    const KIND: ScalarKind = ScalarKind::Rational;

    fn from_rational(value: &Rational) -> Self {
        value.clone()
    }

    fn parse_decimal(text: &str) -> Result<Self> {
        let bad = || Error::BadNumber(text.to_string());
        let (int_part, frac_part) = text.split_once('.').unwrap_or((text, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let digits = format!("{int_part}{frac_part}");
        let numer: BigInt = if digits.is_empty() {
            BigInt::zero()
        } else {
            digits.parse().map_err(|_| bad())?
        };
        let denom = num_traits::pow(BigInt::from(10), frac_part.len());
        Ok(Rational::new(numer, denom))
    }

    fn close_to(&self, other: &Self) -> bool {
        self == other
    }
}

impl Scalar for f64 {
    const KIND: ScalarKind = ScalarKind::F64;

    fn from_rational(value: &Rational) -> Self {
        value.to_f64().unwrap_or(f64::NAN)
    }

    fn parse_decimal(text: &str) -> Result<Self> {
        if text.is_empty() || !text.chars().all(|c| c.is_ascii_digit() || c == '.') {
            return Err(Error::BadNumber(text.to_string()));
        }
        text.parse()
            .map_err(|_| Error::BadNumber(text.to_string()))
    }

    fn close_to(&self, other: &Self) -> bool {
        let diff = (self - other).abs();
        diff <= FLOAT_ABS_TOL || diff <= FLOAT_REL_TOL * self.abs().max(other.abs())
    }
}

/// Parses `a`, `a/b`, or a decimal such as `0.25`, optionally preceded by `-`.
pub fn parse_scalar<S: Scalar>(text: &str) -> Result<S> {
    let text = text.trim();
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest.trim_start()),
        None => (false, text),
    };
    let value = if let Some((n, d)) = body.split_once('/') {
        let n: BigInt = parse_digits(n, text)?;
        let d: BigInt = parse_digits(d, text)?;
        if d.is_zero() {
            return Err(Error::BadNumber(text.to_string()));
        }
        S::from_rational(&Rational::new(n, d))
    } else if body.contains('.') {
        S::parse_decimal(body)?
    } else {
        S::from_rational(&Rational::from_integer(parse_digits(body, text)?))
    };
    Ok(if negative { -value } else { value })
}

fn parse_digits(digits: &str, whole: &str) -> Result<BigInt> {
    let digits = digits.trim();
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(Error::BadNumber(whole.to_string()));
    }
    digits
        .parse()
        .map_err(|_| Error::BadNumber(whole.to_string()))
}
