//! Exact rational scalars.

use alloc::format;
use alloc::string::String;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational used for every geometric decision.
pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Canonical `p/q` spelling: reduced, positive denominator, `/1` kept for integers.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Fixed-point decimal with `places` digits, rounding half away from zero.
/// Never prints a negative zero.
pub fn format_decimal(q: &Rational, places: u32) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let scaled = (q * Rational::from_integer(scale.clone())).round().to_integer();
    let negative = scaled < BigInt::zero();
    let magnitude = scaled.magnitude();
    let whole = magnitude / scale.magnitude();
    let frac = magnitude % scale.magnitude();
    let sign = if negative { "-" } else { "" };
    if places == 0 {
        return format!("{sign}{whole}");
    }
    format!("{sign}{whole}.{frac:0>width$}", width = places as usize)
}

/// Largest integer strictly below `q`.
pub(crate) fn floor_strict(q: &Rational) -> Rational {
    let f = q.floor();
    if &f == q {
        f - Rational::one()
    } else {
        f
    }
}

/// Smallest integer strictly above `q`.
pub(crate) fn ceil_strict(q: &Rational) -> Rational {
    let c = q.ceil();
    if &c == q {
        c + Rational::one()
    } else {
        c
    }
}
