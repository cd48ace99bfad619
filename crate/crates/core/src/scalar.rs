//! Exact rational coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ParseError;

/// Coefficient field for every algebra in this crate.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// `binom(-k, m)` as used in the expansion of `(u + c)^{-k}`.
pub fn negative_binomial(k: u32, m: u32) -> Rational {
    // (-1)^m * C(k + m - 1, m)
    let mut acc = BigInt::one();
    for t in 0..m {
        acc *= BigInt::from(k + t);
        acc /= BigInt::from(t + 1);
    }
    if m % 2 == 1 {
        acc = -acc;
    }
    Rational::from_integer(acc)
}

/// Parses `"p"`, `"p/q"` or `"-p/q"`. Decimal notation is rejected.
pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let s = s.trim();
    let bad = || ParseError::Rational(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Canonical `p/q` string (just `p` when the denominator is one).
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub(crate) fn latex_coefficient(x: &Rational, first: bool) -> String {
    let sign = if x.is_negative() {
        "-"
    } else if first {
        ""
    } else {
        "+"
    };
    let a = x.abs();
    let body = if a.is_one() {
        String::new()
    } else if a.denom().is_one() {
        a.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom())
    };
    format!("{sign}{body}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_binomial_matches_series_of_inverse_powers() {
        // (1 + x)^{-2} = 1 - 2x + 3x^2 - 4x^3
        let got: Vec<_> = (0..4).map(|m| negative_binomial(2, m)).collect();
        assert_eq!(got, vec![int(1), int(-2), int(3), int(-4)]);
        assert_eq!(negative_binomial(1, 5), int(-1));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("1/0").is_err());
        assert_eq!(format_rational(&rat(4, -6)), "-2/3");
        assert_eq!(format_rational(&int(5)), "5");
    }
}
