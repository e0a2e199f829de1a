//! Exact rational bounds.

use crate::error::{Error, Result};
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

pub type Rational = Ratio<i128>;

pub fn int(v: usize) -> Rational {
    Rational::from_integer(v as i128)
}

/// `⌈r⌉` as a signed integer.
pub fn ceil(r: &Rational) -> i128 {
    r.ceil().to_integer()
}

/// `size ≥ r`.
pub fn at_least(size: usize, r: &Rational) -> bool {
    int(size) >= *r
}

/// `size > r`.
pub fn exceeds(size: usize, r: &Rational) -> bool {
    int(size) > *r
}

/// Parses `p/q`, an integer, or a finite decimal.
pub fn parse(s: &str) -> Result<Rational> {
    let bad = || Error::input(format!("cannot parse rational {s:?}"));
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let a: i128 = a.trim().parse().map_err(|_| bad())?;
        let b: i128 = b.trim().parse().map_err(|_| bad())?;
        if b.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(a, b));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (ip, fp) = body.split_once('.').unwrap_or((body, ""));
    let digits = |t: &str| t.chars().all(|c| c.is_ascii_digit());
    if !digits(ip) || !digits(fp) || (ip.is_empty() && fp.is_empty()) || fp.len() > 30 {
        return Err(bad());
    }
    let ival: i128 = if ip.is_empty() {
        0
    } else {
        ip.parse().map_err(|_| bad())?
    };
    let scale = 10i128.pow(fp.len() as u32);
    let fval: i128 = if fp.is_empty() {
        0
    } else {
        fp.parse().map_err(|_| bad())?
    };
    let numer = ival
        .checked_mul(scale)
        .and_then(|v| v.checked_add(fval))
        .ok_or_else(bad)?;
    let r = Rational::new(numer, scale);
    Ok(if neg { -r } else { r })
}

pub fn in_open_unit_interval(r: &Rational) -> bool {
    r.is_positive() && *r < Rational::one()
}

pub fn to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Serde adapter writing a rational as `"p/q"` (or `"p"` when integral).
pub mod as_string {
    use super::Rational;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(r)
    }
}

pub mod option_as_string {
    use super::Rational;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.collect_str(r),
            None => s.serialize_none(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse("3/10").unwrap(), Rational::new(3, 10));
        assert_eq!(parse("0.3").unwrap(), Rational::new(3, 10));
        assert_eq!(parse("-1.5").unwrap(), Rational::new(-3, 2));
        assert_eq!(parse("2").unwrap(), int(2));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
        assert!(parse("").is_err());
    }

    #[test]
    fn ceil_and_comparisons() {
        assert_eq!(ceil(&Rational::new(1, 3)), 1);
        assert_eq!(ceil(&Rational::new(-4, 3)), -1);
        assert_eq!(ceil(&int(2)), 2);
        assert!(at_least(2, &int(2)));
        assert!(!exceeds(2, &int(2)));
        assert!(exceeds(0, &Rational::new(-1, 3)));
    }

    #[test]
    fn display_is_reduced() {
        assert_eq!(Rational::new(16, 22).to_string(), "8/11");
        assert_eq!(Rational::new(4, 2).to_string(), "2");
    }

    #[test]
    fn unit_interval() {
        assert!(in_open_unit_interval(&Rational::new(1, 2)));
        assert!(!in_open_unit_interval(&int(0)));
        assert!(!in_open_unit_interval(&int(1)));
    }
}
