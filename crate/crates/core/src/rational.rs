//! Exact rationals and the helpers the rest of the crate leans on.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"n"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let r = if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad rational '{s}'")))?;
        let q: BigInt = q
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad rational '{s}'")))?;
        if q.is_zero() {
            return Err(Error::Parse(format!("zero denominator in '{s}'")));
        }
        Rational::new(p, q)
    } else {
        let n: BigInt = t
            .parse()
            .map_err(|_| Error::Parse(format!("bad rational '{s}'")))?;
        Rational::from_integer(n)
    };
    Ok(r)
}

/// Reduced `"p/q"`, or `"n"` for integers.
pub fn fmt_rational(r: &Rational) -> String {
    r.to_string()
}

/// Fractional part in `[0,1)`.
pub fn frac(r: &Rational) -> Rational {
    r - r.floor()
}

pub fn is_integer(r: &Rational) -> bool {
    r.is_integer()
}

/// `x - y` is an integer.
pub fn congruent_mod_one(x: &Rational, y: &Rational) -> bool {
    (x - y).is_integer()
}

pub fn floor_i64(r: &Rational) -> i64 {
    let f = r.floor().to_integer();
    i64::try_from(f).expect("floor fits in i64")
}

pub fn to_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        i64::try_from(r.to_integer()).ok()
    } else {
        None
    }
}

/// Binomial coefficient `C(c, j)` for rational `c`.
pub fn binomial(c: &Rational, j: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 0..j {
        acc = acc * (c - int(i as i64)) / int(i as i64 + 1);
    }
    acc
}

/// Euclidean floor division for integers.
pub fn div_floor(a: i64, b: i64) -> i64 {
    Integer::div_floor(&a, &b)
}

pub fn mod_floor(a: i64, b: i64) -> i64 {
    Integer::mod_floor(&a, &b)
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["1/24", "-5/12", "0", "7", "-3"] {
            assert_eq!(fmt_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(fmt_rational(&parse_rational("6/4").unwrap()), "3/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn fractional_part() {
        assert_eq!(frac(&rat(-1, 3)), rat(2, 3));
        assert_eq!(frac(&rat(7, 2)), rat(1, 2));
        assert_eq!(frac(&int(3)), int(0));
    }

    #[test]
    fn rational_binomial() {
        assert_eq!(binomial(&int(5), 2), int(10));
        assert_eq!(binomial(&rat(1, 2), 2), rat(-1, 8));
    }
}
