//! Exact rationals used for every correctness-path quantity.

use crate::error::{Error, Result};
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

pub type Rational = Ratio<i64>;

pub fn rat(n: i64, d: i64) -> Rational {
    Ratio::new(n, d)
}

/// Parses `p/q`, an integer, or a finite decimal such as `0.25`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidInput(format!("not a rational: {s:?}"));
    if let Some((p, q)) = s.split_once('/') {
        let p: i64 = p.trim().parse().map_err(|_| bad())?;
        let q: i64 = q.trim().parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        return Ok(Ratio::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.len() > 12 || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = int.starts_with('-');
        let int: i64 = if int.is_empty() || int == "-" { 0 } else { int.parse().map_err(|_| bad())? };
        let den = 10i64.pow(frac.len() as u32);
        let f: i64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
        let num = int.abs() * den + f;
        return Ok(Ratio::new(if neg { -num } else { num }, den));
    }
    s.parse::<i64>().map(Ratio::from_integer).map_err(|_| bad())
}

pub fn to_f64(r: Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Largest multiple of `1/den` not exceeding `x` (conservative for lower bounds).
pub fn floor_rational(x: f64, den: i64) -> Rational {
    if !x.is_finite() || x <= 0.0 {
        return Rational::zero();
    }
    Ratio::new((x * den as f64).floor() as i64, den)
}

/// `⌈r · k⌉` for nonnegative `r`.
pub fn ceil_mul(r: Rational, k: usize) -> usize {
    let p = *r.numer() as i128 * k as i128;
    let q = *r.denom() as i128;
    ((p + q - 1).div_euclid(q)).max(0) as usize
}

pub fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// `p/q`, or just `p` for integers.
pub fn fmt(r: Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub mod serde_rational {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&fmt(*r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

pub mod serde_opt_rational {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_str(&fmt(*r)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<Rational>, D::Error> {
        let s = Option::<String>::deserialize(d)?;
        s.map(|s| parse_rational(&s).map_err(serde::de::Error::custom)).transpose()
    }
}
