//! Exact rational helpers.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational used for every probability in the crate.
pub type Rational = num_rational::BigRational;

/// `n/d` as a [`Rational`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `r^e` for a non-negative exponent.
pub fn pow(r: &Rational, e: u64) -> Rational {
    let mut base = r.clone();
    let mut acc = Rational::one();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

/// `2^-e`.
pub fn inv_pow2(e: u64) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << e)
}

/// Parses `"p/q"` or an integer `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse {
        location: String::new(),
        message: format!("not a rational: {s:?}"),
    };
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Always `p/q`, including for integers, so documents have one spelling.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Decimal rendering with `digits` significant digits, rounded half-up.
pub fn decimal(r: &Rational, digits: usize) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let neg = r.is_negative();
    let a = r.abs();
    let num = a.numer().magnitude().clone();
    let den = a.denom().magnitude().clone();
    // exponent e such that 10^e <= a < 10^(e+1)
    let mut e: i64 = num.to_string().len() as i64 - den.to_string().len() as i64;
    let ten = BigUint::from(10u32);
    let ge = |e: i64| -> bool {
        if e >= 0 {
            num >= &den * ten.pow(e as u32)
        } else {
            &num * ten.pow((-e) as u32) >= den
        }
    };
    if !ge(e) {
        e -= 1;
    } else if ge(e + 1) {
        e += 1;
    }
    // scaled = round(a * 10^(digits-1-e))
    let shift = digits as i64 - 1 - e;
    let (n2, d2) = if shift >= 0 {
        (&num * ten.pow(shift as u32), den.clone())
    } else {
        (num.clone(), &den * ten.pow((-shift) as u32))
    };
    let (q, rem) = n2.div_rem(&d2);
    let q = if rem * 2u32 >= d2 { q + 1u32 } else { q };
    let mut digits_str = q.to_string();
    let mut shift = shift;
    if digits_str.len() > digits {
        // rounding carried into a new digit
        digits_str.pop();
        shift -= 1;
    }
    let body = place_point(&digits_str, shift);
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

fn place_point(digits: &str, shift: i64) -> String {
    let s = if shift <= 0 {
        format!("{digits}{}", "0".repeat((-shift) as usize))
    } else {
        let shift = shift as usize;
        if shift >= digits.len() {
            format!("0.{}{digits}", "0".repeat(shift - digits.len()))
        } else {
            let (i, f) = digits.split_at(digits.len() - shift);
            format!("{i}.{f}")
        }
    };
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn is_probability(r: &Rational) -> bool {
    !r.is_negative() && r <= &Rational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimals() {
        assert_eq!(decimal(&rat(4, 5), 12), "0.8");
        assert_eq!(decimal(&rat(1, 3), 12), "0.333333333333");
        assert_eq!(decimal(&rat(2, 3), 12), "0.666666666667");
        assert_eq!(decimal(&rat(257, 385), 6), "0.667532");
        assert_eq!(decimal(&rat(2048, 5), 12), "409.6");
        assert_eq!(decimal(&rat(1, 2048), 4), "0.0004883");
        assert_eq!(decimal(&rat(999_999, 1_000_000), 3), "1");
        assert_eq!(decimal(&int(120), 2), "120");
        assert_eq!(decimal(&rat(-1, 8), 12), "-0.125");
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational(" 1 ").unwrap(), int(1));
        assert_eq!(format_rational(&int(1)), "1/1");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn powers() {
        assert_eq!(pow(&rat(1, 4), 3), rat(1, 64));
        assert_eq!(pow(&rat(2, 3), 0), int(1));
        assert_eq!(inv_pow2(10), rat(1, 1024));
    }
}
