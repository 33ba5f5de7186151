//! Exact rational scalars and their text encoding.
//!
//! Wire format is `p/q` in lowest terms, or `p` for integers. Parsing also
//! accepts finite decimals such as `3.5` and converts them exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::ParseError;

/// Arbitrary-precision rational; the only scalar type in the crate.
pub type Rational = num_rational::BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn half() -> Rational {
    rat(1, 2)
}

/// Parses a single rational token: `p`, `p/q` or a finite decimal.
pub fn parse_rational(token: &str) -> Result<Rational, ParseError> {
    let t = token.trim();
    let bad = || ParseError::Rational(token.to_string());
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = t.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| bad())?;
        let d: BigInt = den.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        let negative = whole.trim_start().starts_with('-');
        let digits_ok = !frac.is_empty() && frac.bytes().all(|b| b.is_ascii_digit());
        if !digits_ok {
            return Err(bad());
        }
        let whole_part: BigInt = match whole {
            "" | "-" | "+" => BigInt::zero(),
            w => w.parse().map_err(|_| bad())?,
        };
        let frac_num: BigInt = frac.parse().map_err(|_| bad())?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let frac_part = Rational::new(frac_num, scale);
        let whole_r = Rational::from_integer(whole_part);
        return Ok(if negative {
            whole_r - frac_part
        } else {
            whole_r + frac_part
        });
    }
    let n: BigInt = t.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(n))
}

/// Parses a comma-separated list of rationals. Empty input is an empty list.
pub fn parse_rational_list(text: &str) -> Result<Vec<Rational>, ParseError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(parse_rational).collect()
}

pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

/// Decimal rendering when the denominator is of the form 2^a 5^b; falls back
/// to `p/q` otherwise.
pub fn format_decimal(value: &Rational) -> String {
    if value.is_integer() {
        return value.numer().to_string();
    }
    let mut den = value.denom().clone();
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    let mut digits = 0usize;
    let mut twos = 0usize;
    let mut fives = 0usize;
    while den.is_even() {
        den /= &two;
        twos += 1;
    }
    while (&den % &five).is_zero() {
        den /= &five;
        fives += 1;
    }
    if !den.is_one() {
        return value.to_string();
    }
    digits += twos.max(fives);
    let scaled = value * Rational::from_integer(num_traits::pow(BigInt::from(10), digits));
    let scaled = scaled.to_integer();
    let negative = scaled.is_negative();
    let mut body = scaled.abs().to_string();
    if body.len() <= digits {
        body = format!("{}{}", "0".repeat(digits + 1 - body.len()), body);
    }
    let split = body.len() - digits;
    format!(
        "{}{}.{}",
        if negative { "-" } else { "" },
        &body[..split],
        &body[split..]
    )
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a, I: IntoIterator<Item = &'a Rational>>(values: I) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-9/2").unwrap(), rat(-9, 2));
        assert_eq!(parse_rational(" 4/6 ").unwrap(), rat(2, 3));
        assert_eq!(parse_rational("3.5").unwrap(), rat(7, 2));
        assert_eq!(parse_rational("-0.25").unwrap(), rat(-1, 4));
        assert_eq!(parse_rational("-2.5").unwrap(), rat(-5, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1.").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn parse_error_names_token() {
        let err = parse_rational_list("1,2,x7").unwrap_err();
        assert!(err.to_string().contains("x7"));
    }

    #[test]
    fn formats() {
        assert_eq!(format_rational(&rat(7, 2)), "7/2");
        assert_eq!(format_rational(&int(-3)), "-3");
        assert_eq!(format_decimal(&rat(7, 2)), "3.5");
        assert_eq!(format_decimal(&rat(-5, 2)), "-2.5");
        assert_eq!(format_decimal(&rat(-1, 4)), "-0.25");
        assert_eq!(format_decimal(&rat(1, 3)), "1/3");
        assert_eq!(format_decimal(&int(4)), "4");
    }
}
