//! Exact rationals and their JSON form.
//!
//! `BigRational` normalizes on construction (lowest terms, positive
//! denominator), so structural equality and hashing are sound.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::{self, Deserializer, Visitor};
use serde::Serializer;
use std::fmt;

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

/// Canonical text: `p` for integers, `p/q` otherwise.
pub fn format_rational(q: &Rational) -> String {
    if is_integer(q) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let int = |t: &str| -> Result<BigInt> {
        let t = t.trim();
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse::<BigInt>().map_err(|_| bad())
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(int(s)?)),
        Some((n, d)) => {
            let d = int(d)?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(int(n)?, d))
        }
    }
}

/// Serde adapter: integers that fit in `i64` become JSON numbers, everything
/// else a `"p/q"` string. Both forms are accepted on input.
pub mod serde_rational {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        if is_integer(q) {
            if let Some(v) = q.numer().to_i64() {
                return s.serialize_i64(v);
            }
        }
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Rational;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a \"p/q\" string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Rational, E> {
                Ok(rat(v))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Rational, E> {
                Ok(Rational::from_integer(BigInt::from(v)))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Rational, E> {
                parse_rational(v).map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}

pub mod serde_rational_vec {
    use super::*;
    use serde::ser::SerializeSeq;
    use serde::Deserialize;

    #[derive(Deserialize)]
    struct Wrap(#[serde(with = "serde_rational")] Rational);

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
        struct One<'a>(&'a Rational);
        impl serde::Serialize for One<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                serde_rational::serialize(self.0, s)
            }
        }
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for q in v {
            seq.serialize_element(&One(q))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Rational>, D::Error> {
        Ok(Vec::<Wrap>::deserialize(d)?.into_iter().map(|w| w.0).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_on_construction() {
        assert_eq!(frac(2, 4), frac(1, 2));
        assert_eq!(frac(3, -6), frac(-1, 2));
        assert!(frac(-1, 2).denom() > &BigInt::zero());
    }

    #[test]
    fn text_round_trip() {
        for q in [rat(0), rat(-7), frac(3, 5), frac(-22, 7)] {
            assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
        }
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("--1").is_err());
    }
}
