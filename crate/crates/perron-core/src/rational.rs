//! Helpers on exact rationals. Search bounds are parsed from decimal
//! strings so pruning decisions are bit-for-bit reproducible; binary
//! floating point never feeds the enumerator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Parses a decimal string like `1.1743` into the exact rational
/// 11743/10000. Plain integers and an optional leading sign are accepted.
pub fn parse_decimal_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s.strip_prefix('+').unwrap_or(s)),
    };
    if body.is_empty() {
        return None;
    }
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let num: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().ok()?
    };
    let den = BigInt::from(10u32).pow(frac_part.len() as u32);
    Some(BigRational::new(num * BigInt::from(sign), den))
}

/// `r^k` for non-negative k, exact.
pub fn pow_rational(r: &BigRational, k: u32) -> BigRational {
    let mut acc = BigRational::one();
    let mut base = r.clone();
    let mut e = k;
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

/// Largest integer <= x.
pub fn floor_to_bigint(x: &BigRational) -> BigInt {
    x.floor().to_integer()
}

/// Smallest integer >= x.
pub fn ceil_to_bigint(x: &BigRational) -> BigInt {
    x.ceil().to_integer()
}

pub fn is_integer(x: &BigRational) -> bool {
    x.denom().is_one()
}

/// Approximate value for display; never used for pruning decisions.
pub fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().expect("rational out of f64 range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_decimals_exactly() {
        let r = parse_decimal_rational("1.1743").unwrap();
        assert_eq!(r, BigRational::new(BigInt::from(11743), BigInt::from(10000)));
        let r = parse_decimal_rational("1.84").unwrap();
        assert_eq!(r, BigRational::new(BigInt::from(46), BigInt::from(25)));
        assert_eq!(
            parse_decimal_rational("2").unwrap(),
            BigRational::from(BigInt::from(2))
        );
        assert!(parse_decimal_rational("1.2e3").is_none());
        assert!(parse_decimal_rational("").is_none());
    }

    #[test]
    fn pow_and_floor() {
        let r = parse_decimal_rational("1.5").unwrap();
        assert_eq!(pow_rational(&r, 3), BigRational::new(27.into(), 8.into()));
        assert_eq!(floor_to_bigint(&pow_rational(&r, 3)), BigInt::from(3));
        assert_eq!(ceil_to_bigint(&pow_rational(&r, 3)), BigInt::from(4));
        let neg = BigRational::new((-7).into(), 2.into());
        assert_eq!(floor_to_bigint(&neg), BigInt::from(-4));
        assert_eq!(ceil_to_bigint(&neg), BigInt::from(-3));
    }
}
