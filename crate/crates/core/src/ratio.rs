//! Rational numbers as `"p/q"` strings.
//!
//! All file formats carry exact rationals in this form; `"3"` is accepted
//! on input and printed as `"3/1"` on output so that emitted files are
//! byte-stable.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::str::FromStr;

/// Parse `"p/q"` or a bare integer `"p"`.
pub fn parse(s: &str) -> Result<BigRational, RatioParseError> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n = BigInt::from_str(num).map_err(|_| RatioParseError(s.to_owned()))?;
    let d = match den {
        Some(d) => BigInt::from_str(d).map_err(|_| RatioParseError(s.to_owned()))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(RatioParseError(s.to_owned()));
    }
    Ok(BigRational::new(n, d))
}

/// Print with an explicit denominator, e.g. `"5/24"`, `"0/1"`.
pub fn format(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a rational: {0:?} (expected \"p/q\" or an integer)")]
pub struct RatioParseError(pub String);

/// Serde adapter: a `BigRational` field as a `"p/q"` string.
pub mod serde_str {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &BigRational, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&format(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(de)?;
        parse(&s).map_err(serde::de::Error::custom)
    }
}
