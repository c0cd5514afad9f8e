//! Power-sum bounds for monic integer polynomials whose roots lie in the
//! annulus `r^{-1} <= |z| <= r` with a distinguished real root above 1.
//! All endpoint arithmetic is exact rational, so the derived integer
//! ranges are identical on every platform.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::error::BoundsError;
use crate::rational::{ceil_to_bigint, floor_to_bigint, pow_rational};

/// Admissible range for the k-th power sum of the roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSumRange {
    pub k: u32,
    pub lower: BigRational,
    pub lower_strict: bool,
    pub upper: BigRational,
    /// Inclusive integer interval `{p : lower (<|<=) p <= upper}`; `None`
    /// when empty. Endpoints come straight from the exact rational bounds,
    /// never from rounding a float.
    pub admissible: Option<(i64, i64)>,
}

impl PowerSumRange {
    pub fn admissible_len(&self) -> u64 {
        match self.admissible {
            Some((lo, hi)) => (hi - lo + 1) as u64,
            None => 0,
        }
    }

    pub fn contains(&self, p: i64) -> bool {
        matches!(self.admissible, Some((lo, hi)) if lo <= p && p <= hi)
    }
}

/// Bounds for the k-th power sum at degree `d` and Perron bound `r`.
///
/// For d = 2n:   min{2-2n, -(n-2) r^k - n r^{-k}}  <= p_k <= n (r^k + r^{-k})
/// For d = 2n+1: min{1-2n, -(n-2) r^k - 1 - n r^{-k}} <= p_k <= n (r^k + r^{-k}) + 1
///
/// The lower comparison is strict when no root attains modulus exactly
/// `lambda^{-1}` (the nonorientable case); orientation-reversing runs pass
/// `strict_lower = false` because `-lambda^{-1}` is always a root there.
pub fn power_sum_range(
    d: usize,
    k: u32,
    r: &BigRational,
    strict_lower: bool,
) -> Result<PowerSumRange, BoundsError> {
    if *r <= BigRational::one() {
        return Err(BoundsError::BoundNotAboveOne(r.to_string()));
    }
    if d < 2 {
        return Err(BoundsError::DegreeTooSmall(d));
    }
    let n = (d / 2) as i64;
    let odd = d % 2 == 1;

    let rk = pow_rational(r, k);
    let rk_inv = rk.recip();
    let n_rat = BigRational::from(BigInt::from(n));
    let n_minus_2 = BigRational::from(BigInt::from(n - 2));

    let mut upper = &n_rat * (&rk + &rk_inv);
    let mut lower_curve = -&n_minus_2 * &rk - &n_rat * &rk_inv;
    let lower_flat;
    if odd {
        upper += BigRational::one();
        lower_curve -= BigRational::one();
        lower_flat = BigRational::from(BigInt::from(1 - 2 * n));
    } else {
        lower_flat = BigRational::from(BigInt::from(2 - 2 * n));
    }
    let lower = lower_flat.min(lower_curve);

    let lo_int = if strict_lower {
        floor_to_bigint(&lower) + BigInt::one()
    } else {
        ceil_to_bigint(&lower)
    };
    let hi_int = floor_to_bigint(&upper);
    let admissible = if lo_int <= hi_int {
        Some((
            lo_int.to_i64().expect("admissible endpoint out of i64 range"),
            hi_int.to_i64().expect("admissible endpoint out of i64 range"),
        ))
    } else {
        None
    };

    Ok(PowerSumRange {
        k,
        lower,
        lower_strict: strict_lower,
        upper,
        admissible,
    })
}

/// Exact membership test of an integer power sum against the rational
/// bounds. Equivalent to `contains` but usable without materializing the
/// integer interval.
pub fn within_bounds(range: &PowerSumRange, p: &BigInt) -> bool {
    let pr = BigRational::from(p.clone());
    let lower_ok = if range.lower_strict {
        pr > range.lower
    } else {
        pr >= range.lower
    };
    lower_ok && pr <= range.upper
}

/// Ranges for k = 1..=m at fixed degree and bound.
pub fn power_sum_ranges(
    d: usize,
    m: usize,
    r: &BigRational,
    strict_lower: bool,
) -> Result<Vec<PowerSumRange>, BoundsError> {
    (1..=m as u32)
        .map(|k| power_sum_range(d, k, r, strict_lower))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_decimal_rational;

    #[test]
    fn genus_four_hand_ranges() {
        // d=3, r=1.84: p_1 in {0,..,3}, p_2 in {0,..,4} with strict lower.
        let r = parse_decimal_rational("1.84").unwrap();
        let r1 = power_sum_range(3, 1, &r, true).unwrap();
        assert_eq!(r1.admissible, Some((0, 3)));
        let r2 = power_sum_range(3, 2, &r, true).unwrap();
        assert_eq!(r2.admissible, Some((0, 4)));
    }

    #[test]
    fn even_degree_branch() {
        // d=4, k=1, r=1.52: lower = min{-2, -2*(25/38)} = -2 strict,
        // upper = 2(38/25 + 25/38) ~ 4.356 -> {-1,...,4}.
        let r = parse_decimal_rational("1.52").unwrap();
        let rng = power_sum_range(4, 1, &r, true).unwrap();
        assert_eq!(rng.lower, BigRational::from(BigInt::from(-2)));
        assert_eq!(rng.admissible, Some((-1, 4)));
    }

    #[test]
    fn degree_eleven_prefix_space() {
        // The documented range sizes for d=11, r=1.1743 are
        // 20,20,21,23,24,27,30,34,38,43. Their product is
        // 208,657,669,248,000 (the originally stated total of
        // 10,641,541,131,648,000 is off by a factor of 51 from its own
        // factors; the integral-coefficient count of 57,643,952 matches
        // the corrected product, which shrinks by about 10! under the
        // divisibility constraints).
        let r = parse_decimal_rational("1.1743").unwrap();
        let expected = [20u64, 20, 21, 23, 24, 27, 30, 34, 38, 43];
        let mut product: u128 = 1;
        for (k, want) in expected.iter().enumerate() {
            let rng = power_sum_range(11, (k + 1) as u32, &r, true).unwrap();
            assert_eq!(rng.admissible_len(), *want, "k = {}", k + 1);
            product *= rng.admissible_len() as u128;
        }
        assert_eq!(product, 208_657_669_248_000u128);
    }

    #[test]
    fn bound_errors() {
        let one = BigRational::one();
        assert!(power_sum_range(4, 1, &one, true).is_err());
        let r = parse_decimal_rational("1.5").unwrap();
        assert!(power_sum_range(1, 1, &r, true).is_err());
    }

    #[test]
    fn monotone_in_r() {
        // Enlarging r never shrinks the admissible set.
        for d in [3usize, 4, 7, 10, 11] {
            for k in 1..=(d - 1) as u32 {
                let mut prev: Option<(i64, i64)> = None;
                for r_str in ["1.05", "1.1743", "1.3", "1.52", "1.84", "2.5"] {
                    let r = parse_decimal_rational(r_str).unwrap();
                    let rng = power_sum_range(d, k, &r, true).unwrap();
                    if let (Some((plo, phi)), Some((lo, hi))) = (prev, rng.admissible) {
                        assert!(lo <= plo && hi >= phi, "d={d} k={k} r={r_str}");
                    }
                    if rng.admissible.is_some() {
                        prev = rng.admissible;
                    }
                }
            }
        }
    }
}
