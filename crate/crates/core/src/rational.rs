//! Exact rational coefficients.
//!
//! `Rational` is `num_rational::BigRational`, which keeps the denominator
//! positive and the fraction in lowest terms after every operation.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parse `"p"`, `"p/q"` or a plain decimal such as `"0.25"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::ParameterOutOfRange(format!("cannot parse rational {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = whole.starts_with('-');
        let w: BigInt = if whole.is_empty() || whole == "-" || whole == "+" {
            BigInt::zero()
        } else {
            whole.parse().map_err(|_| bad())?
        };
        let f: BigInt = frac.parse().map_err(|_| bad())?;
        let den = num_traits::pow(BigInt::from(10), frac.len());
        let mag = Rational::new(w.abs() * &den + f, den);
        return Ok(if neg { -mag } else { mag });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(n))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Canonical text form: `"p"` for integers, otherwise `"p/q"` in lowest terms.
pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Rising factorial (a)_n.
pub fn pochhammer(a: &Rational, n: usize) -> Rational {
    let mut acc = int(1);
    let mut t = a.clone();
    for _ in 0..n {
        acc *= &t;
        t += int(1);
    }
    acc
}

pub fn factorial(n: usize) -> Rational {
    pochhammer(&int(1), n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert_eq!(parse_rational("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rational("-1.5").unwrap(), rat(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn lowest_terms_formatting() {
        assert_eq!(fmt_rational(&rat(6, -4)), "-3/2");
        assert_eq!(fmt_rational(&rat(8, 4)), "2");
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(&rat(1, 2), 3), rat(15, 8));
        assert_eq!(factorial(5), int(120));
        assert_eq!(pochhammer(&int(-2), 3), int(0));
    }
}
