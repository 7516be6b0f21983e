//! Exact rational scalars and their string form.
//!
//! Every coefficient in this crate is a [`Rational`]: an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator. The string form
//! used in JSON documents and reports is `"p/q"`, or just `"p"` when the
//! denominator is 1.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

pub type Rational = num_rational::BigRational;

/// Shorthand for `n/d` used throughout tests and examples.
///
/// Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"` into a reduced rational.
///
/// Rejects empty input, a zero denominator, and any non-numeric noise.
pub fn parse_rational(s: &str) -> Result<Rational, RationalParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(RationalParseError::Empty);
    }
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let numer =
        BigInt::from_str(num_str).map_err(|_| RationalParseError::BadInteger(s.to_owned()))?;
    let denom = match den_str {
        Some(d) => BigInt::from_str(d).map_err(|_| RationalParseError::BadInteger(s.to_owned()))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(RationalParseError::ZeroDenominator(s.to_owned()));
    }
    Ok(Rational::new(numer, denom))
}

/// Formats a rational as `"p/q"`, or `"p"` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Rounds to `f64` for the floating-point consumers (fits, closed forms).
pub fn to_f64(r: &Rational) -> f64 {
    // Good enough for the magnitudes this crate produces; exact values stay
    // on the Rational side.
    let numer = r.numer();
    let denom = r.denom();
    match (
        numer.to_string().parse::<f64>(),
        denom.to_string().parse::<f64>(),
    ) {
        (Ok(n), Ok(d)) => n / d,
        _ => f64::NAN,
    }
}

/// Returns true when `r` is a non-negative value.
pub fn is_nonnegative(r: &Rational) -> bool {
    !r.is_negative()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RationalParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal `{0}`")]
    BadInteger(String),
    #[error("zero denominator in rational literal `{0}`")]
    ZeroDenominator(String),
}

/// Serde adapter: rationals as `"p/q"` strings.
pub mod rational_string {
    use super::*;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Rational, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&format_rational(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(de)?;
        parse_rational(&s).map_err(de::Error::custom)
    }
}

/// Serde adapter: `Option<Rational>` as `"p/q"` or `null`.
pub mod optional_rational_string {
    use super::*;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Option<Rational>, ser: S) -> Result<S::Ok, S::Error> {
        match value {
            Some(r) => ser.serialize_some(&format_rational(r)),
            None => ser.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Option<Rational>, D::Error> {
        let s = Option::<String>::deserialize(de)?;
        s.map(|s| parse_rational(&s).map_err(de::Error::custom))
            .transpose()
    }
}
