//! Exact rational numbers and their text forms.
//!
//! Decimal literals such as `0.2875` parse to the exact fraction `23/80`;
//! fractions such as `7/12` are accepted as well.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"12"`, `"-0.2875"`, `"1e-3"`-free decimals and `"7/12"` exactly.
pub fn parse(text: &str) -> Result<Rational, Error> {
    let s = text.trim();
    let bad = || Error::Parse(format!("not a number: {text:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let num = parse(n)?;
        let den = parse(d)?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator: {text:?}")));
        }
        return Ok(num / den);
    }
    let (negative, body) = match s.as_bytes()[0] {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{whole}{frac}");
    let num: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().map_err(|_| bad())? };
    let den = num_traits::pow(BigInt::from(10), frac.len());
    let value = Rational::new(num, den);
    Ok(if negative { -value } else { value })
}

/// Canonical exact text: integers as `"5"`, terminating decimals as
/// `"0.2875"`, everything else as `"1/6"`.
pub fn to_text(value: &Rational) -> String {
    if value.is_integer() {
        return value.numer().to_string();
    }
    let mut den = value.denom().clone();
    let (mut twos, mut fives) = (0usize, 0usize);
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    while (&den % &two).is_zero() {
        den /= &two;
        twos += 1;
    }
    while (&den % &five).is_zero() {
        den /= &five;
        fives += 1;
    }
    if !den.is_one() {
        return format!("{}/{}", value.numer(), value.denom());
    }
    let places = twos.max(fives);
    let scaled = value * Rational::from_integer(num_traits::pow(BigInt::from(10), places));
    let digits = scaled.to_integer().abs().to_string();
    let padded = format!("{digits:0>width$}", width = places + 1);
    let (whole, frac) = padded.split_at(padded.len() - places);
    let sign = if value.is_negative() { "-" } else { "" };
    format!("{sign}{whole}.{frac}")
}

pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

/// Rounds to `places` decimals, half away from zero, for display.
pub fn rounded(value: &Rational, places: u32) -> f64 {
    let scale = Rational::from_integer(num_traits::pow(BigInt::from(10), places as usize));
    let scaled = value * &scale;
    to_f64(&(scaled.round() / scale))
}

/// Serde adapter storing a rational as its exact text.
pub mod text {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
        to_text(value).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let raw = NumberOrText::deserialize(d)?;
        raw.into_rational().map_err(serde::de::Error::custom)
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    pub(crate) enum NumberOrText {
        Text(String),
        Number(serde_json::Number),
    }

    impl NumberOrText {
        pub(crate) fn into_rational(self) -> Result<Rational, Error> {
            match self {
                NumberOrText::Text(s) => parse(&s),
                NumberOrText::Number(n) => parse(&n.to_string()),
            }
        }
    }
}

/// Serde adapter for `Vec<Rational>`.
pub mod text_vec {
    use super::*;

    pub fn serialize<S: Serializer>(values: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        values.iter().map(to_text).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let raw = Vec::<text::NumberOrText>::deserialize(d)?;
        raw.into_iter().map(|r| r.into_rational().map_err(serde::de::Error::custom)).collect()
    }
}

/// Exact value plus float convenience form, as emitted in reports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Num {
    #[serde(with = "text")]
    pub exact: Rational,
    pub approx: f64,
}

impl From<&Rational> for Num {
    fn from(value: &Rational) -> Self {
        Num { exact: value.clone(), approx: to_f64(value) }
    }
}

impl From<Rational> for Num {
    fn from(value: Rational) -> Self {
        let approx = to_f64(&value);
        Num { exact: value, approx }
    }
}

/// Serde adapter storing a rational as a [`Num`]; plain text or numbers are accepted on input.
pub mod num {
    use super::*;

    #[derive(Deserialize)]
    #[serde(untagged)]
    pub(crate) enum Repr {
        Full(Num),
        Plain(text::NumberOrText),
    }

    impl Repr {
        pub(crate) fn into_rational(self) -> Result<Rational, Error> {
            match self {
                Repr::Full(n) => Ok(n.exact),
                Repr::Plain(p) => p.into_rational(),
            }
        }
    }

    pub fn serialize<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
        Num::from(value).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        Repr::deserialize(d)?.into_rational().map_err(serde::de::Error::custom)
    }
}

/// [`num`] for `Vec<Rational>`.
pub mod num_vec {
    use super::*;

    pub fn serialize<S: Serializer>(values: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        values.iter().map(Num::from).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Vec::<num::Repr>::deserialize(d)?
            .into_iter()
            .map(|r| r.into_rational().map_err(serde::de::Error::custom))
            .collect()
    }
}
