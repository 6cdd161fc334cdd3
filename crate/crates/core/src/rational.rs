//! The universal scalar. Every quantity in the core paths is an
//! arbitrary-precision rational; [`num::BigRational`] already maintains the
//! lowest-terms, positive-denominator invariant, so this module only adds
//! construction and text-format helpers. The text form accepted everywhere is
//! `"p/q"` or a plain integer string; decimals are rejected so no value is
//! ever silently rounded.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `n/d` from machine integers.
pub fn rat(n: i64, d: i64) -> Rational {
    assert!(d != 0, "zero denominator");
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Whole number as a rational.
pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if s.contains('.') {
        return Err(Error::Parse(format!(
            "decimal literals are not accepted (got {s:?}); write an exact fraction like \"1/4\""
        )));
    }
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("invalid integer {t:?}")))
    };
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let num = parse_int(n)?;
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(num, den))
        }
    }
}

/// Canonical text form: `"p/q"`, or just `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Largest integer ≤ r.
pub fn floor_int(r: &Rational) -> BigInt {
    r.floor().to_integer()
}

/// Smallest integer ≥ r.
pub fn ceil_int(r: &Rational) -> BigInt {
    r.ceil().to_integer()
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}
