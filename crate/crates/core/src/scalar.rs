//! Scalar domains.
//!
//! Two realizations of the real numbers are supported: exact rationals
//! ([`Rational`], arbitrary precision, always in lowest terms) and `f64`.
//! Every generic operation in this crate is written against [`Scalar`], so
//! a matrix's domain is fixed by its element type and two domains can never
//! meet in one operation.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

/// Exact rational scalar. `num_rational` keeps values reduced with a
/// positive denominator.
pub type Rational = BigRational;

/// The two scalar domains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Domain {
    Rational,
    Float,
}

impl Display for Domain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Domain::Rational => f.write_str("rational"),
            Domain::Float => f.write_str("float"),
        }
    }
}

/// Relative tolerance used by float comparisons. Ignored in the rational
/// domain, where every comparison is exact.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Tolerance(f64);

impl Tolerance {
    pub const DEFAULT: Tolerance = Tolerance(1e-9);

    /// Returns `None` for negative or non-finite values.
    pub fn new(value: f64) -> Option<Self> {
        (value.is_finite() && value >= 0.0).then_some(Tolerance(value))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance::DEFAULT
    }
}

/// A real number field realization.
///
/// The tolerance-taking methods are exact in the rational domain. For
/// floats, `approx_eq` and `definitely_lt` scale the tolerance by
/// `max(1, |x|)`; the sign tests use it as an absolute threshold.
pub trait Scalar:
    Clone + Debug + Display + PartialOrd + Signed + Send + Sync + 'static
{
    const DOMAIN: Domain;

    fn from_int(n: i64) -> Self;

    /// `num / den`. Panics when `den == 0`.
    fn from_ratio(num: i64, den: i64) -> Self;

    fn to_f64(&self) -> f64;

    fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool;

    /// Strict `self < bound`. Floats must clear `bound` by the guard band.
    fn definitely_lt(&self, bound: &Self, tol: Tolerance) -> bool;

    fn is_positive_tol(&self, tol: Tolerance) -> bool;

    fn is_negative_tol(&self, tol: Tolerance) -> bool;

    /// Pivot test for elimination: is `self` zero relative to `scale`?
    fn negligible(&self, scale: &Self, tol: Tolerance) -> bool;

    /// Exact `p/q` text for rationals, 17 significant digits for floats.
    fn to_report_string(&self) -> String;

    fn is_zero_tol(&self, tol: Tolerance) -> bool {
        !self.is_positive_tol(tol) && !self.is_negative_tol(tol)
    }
}

impl Scalar for Rational {
    const DOMAIN: Domain = Domain::Rational;

    fn from_int(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Rational::new(BigInt::from(num), BigInt::from(den))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn approx_eq(&self, other: &Self, _tol: Tolerance) -> bool {
        self == other
    }

    fn definitely_lt(&self, bound: &Self, _tol: Tolerance) -> bool {
        self < bound
    }

    fn is_positive_tol(&self, _tol: Tolerance) -> bool {
        self.is_positive()
    }

    fn is_negative_tol(&self, _tol: Tolerance) -> bool {
        self.is_negative()
    }

    fn negligible(&self, _scale: &Self, _tol: Tolerance) -> bool {
        self.is_zero()
    }

    fn to_report_string(&self) -> String {
        self.to_string()
    }
}

impl Scalar for f64 {
    const DOMAIN: Domain = Domain::Float;

    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        num as f64 / den as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        let scale = 1f64.max(self.abs()).max(other.abs());
        (self - other).abs() <= tol.value() * scale
    }

    fn definitely_lt(&self, bound: &Self, tol: Tolerance) -> bool {
        *self < bound - tol.value() * 1f64.max(bound.abs())
    }

    fn is_positive_tol(&self, tol: Tolerance) -> bool {
        *self > tol.value()
    }

    fn is_negative_tol(&self, tol: Tolerance) -> bool {
        *self < -tol.value()
    }

    fn negligible(&self, scale: &Self, tol: Tolerance) -> bool {
        self.abs() <= tol.value() * scale.abs()
    }

    fn to_report_string(&self) -> String {
        format!("{:.16e}", self)
    }
}

/// Error from [`parse_rational`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not an exact number literal: {0:?}")]
pub struct ParseScalarError(pub String);

/// Parses `p/q` or a decimal literal (optional sign, fraction digits and
/// exponent) into an exact rational. Decimal digits are converted directly,
/// never through a binary float, so `0.1` becomes exactly `1/10`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseScalarError> {
    let s = text.trim();
    let err = || ParseScalarError(text.to_string());
    if let Some((num, den)) = s.split_once('/') {
        let num = parse_decimal(num.trim()).ok_or_else(err)?;
        let den = parse_decimal(den.trim()).ok_or_else(err)?;
        if den.is_zero() {
            return Err(err());
        }
        return Ok(num / den);
    }
    parse_decimal(s).ok_or_else(err)
}

fn parse_decimal(s: &str) -> Option<Rational> {
    let (negative, body) = match s.as_bytes().first()? {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    let (mantissa, exponent) = match body.find(['e', 'E']) {
        Some(i) => (&body[..i], i64::from_str(&body[i + 1..]).ok()?),
        None => (body, 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let mut value = Rational::from_integer(BigInt::from_str(&digits).ok()?);
    let shift = exponent.checked_sub(frac_part.len() as i64)?;
    // Guard against absurd exponents in hostile input.
    if shift.unsigned_abs() > 100_000 {
        return None;
    }
    let ten = Rational::from_integer(BigInt::from(10));
    let scale = num_traits::pow(ten, shift.unsigned_abs() as usize);
    if shift >= 0 {
        value *= scale;
    } else {
        value /= scale;
    }
    Some(if negative { -value } else { value })
}
