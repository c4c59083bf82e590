//! Exact scalar support: arbitrary-precision rationals plus the text
//! conventions used across the crate (`p/q` fractions, exact decimals).

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Exact arbitrary-precision fraction, the default scalar of the crate.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("ParseError: cannot parse {0:?} as a rational number")]
    BadNumber(String),
    #[error("ParseError: zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// Parses `7`, `-3/4` or an exact decimal such as `1.2` (= 6/5).
///
/// Decimals are read digit-for-digit, so the result is the exact rational the
/// text denotes, not the nearest double.
pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseError::BadNumber(s.to_string()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| ParseError::BadNumber(s.to_string()))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| ParseError::BadNumber(s.to_string()))?;
        if d.is_zero() {
            return Err(ParseError::ZeroDenominator(s.to_string()));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseError::BadNumber(s.to_string()));
        }
        let digits = format!("{}{}", int_part, frac_part);
        let n: BigInt = digits
            .parse()
            .map_err(|_| ParseError::BadNumber(s.to_string()))?;
        let den = BigInt::from(10u32).pow(frac_part.len() as u32);
        return Ok(Rational::new(n, den));
    }
    let n: BigInt = s.parse().map_err(|_| ParseError::BadNumber(s.to_string()))?;
    Ok(Rational::from_integer(n))
}

/// Renders a rational as `p/q`, or just `p` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Nearest double; rationals here stay far below overflow range.
pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Fall back to a quotient of truncated parts for huge operands.
        let n = r.numer().to_f64().unwrap_or(f64::INFINITY * sign_of(r));
        let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

fn sign_of(r: &Rational) -> f64 {
    if r.is_negative() {
        -1.0
    } else {
        1.0
    }
}

/// Exact rational from a double (doubles are dyadic rationals).
pub fn rational_from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d` as a rational.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_fractions_decimals() {
        assert_eq!(parse_rational("7").unwrap(), rat(7));
        assert_eq!(parse_rational("-3/4").unwrap(), ratio(-3, 4));
        assert_eq!(parse_rational("1.2").unwrap(), ratio(6, 5));
        assert_eq!(parse_rational("-5.4").unwrap(), ratio(-27, 5));
        assert_eq!(parse_rational("0.078").unwrap(), ratio(78, 1000));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1.2.3").is_err());
    }

    #[test]
    fn formats_back() {
        assert_eq!(format_rational(&ratio(6, 5)), "6/5");
        assert_eq!(format_rational(&rat(-3)), "-3");
        assert_eq!(format_rational(&ratio(4, 2)), "2");
    }
}
