use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"7"`, `"-3/4"` or `" 12 / 8 "`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(n, d))
}

pub(crate) fn pow_i(x: &Rational, e: i64) -> Rational {
    if e == 0 {
        return Rational::one();
    }
    let p = num_traits::pow(x.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

pub(crate) fn factorial(n: u64) -> Rational {
    Rational::from_integer((1..=n).fold(BigInt::one(), |a, k| a * BigInt::from(k)))
}

pub(crate) fn ceil_i64(x: &Rational) -> i64 {
    use num_traits::ToPrimitive;
    x.ceil().to_integer().to_i64().expect("exponent out of range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("-3/4").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational(" 12 / 8 ").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("5").unwrap(), int(5));
        assert_eq!(parse_rational("1/0"), Err(Error::DivisionByZero));
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn display_is_reduced() {
        assert_eq!(rat(6, -4).to_string(), "-3/2");
        assert_eq!(int(7).to_string(), "7");
    }

    #[test]
    fn pow_negative() {
        assert_eq!(pow_i(&rat(2, 3), -2), rat(9, 4));
        assert_eq!(factorial(5), int(120));
    }
}
