//! Exact real-root counting via Sturm sequences over the integers.
//!
//! Used wherever a filter verdict must be resolved without floating
//! point: the lambda > 1 gate, multiplicity checks, and the final
//! largest-root-vs-bound comparison.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::poly::IntPolynomial;

/// gcd of the coefficients, positive; 0 for the zero polynomial.
fn content(p: &IntPolynomial) -> BigInt {
    use num_integer::Integer;
    let mut g = BigInt::zero();
    for c in p.coeffs() {
        g = g.gcd(c);
    }
    g
}

/// Divides out the content and normalizes the leading coefficient to be
/// positive.
fn primitive_positive(p: &IntPolynomial) -> IntPolynomial {
    let mut q = primitive_keep_sign(p);
    if !q.is_zero() && q.leading().is_negative() {
        q = q.neg();
    }
    q
}

/// Divides out the (positive) content only. Sturm chains depend on the
/// remainder signs, so no sign normalization here.
fn primitive_keep_sign(p: &IntPolynomial) -> IntPolynomial {
    if p.is_zero() {
        return p.clone();
    }
    let c = content(p);
    IntPolynomial::from_coeffs(p.coeffs().iter().map(|x| x / &c).collect())
}

/// Pseudo-remainder of a by b, premultiplied by a positive power of
/// lc(b) so the division is exact over the integers and signs are
/// preserved.
fn pseudo_rem_positive(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    assert!(!b.is_zero());
    if a.is_zero() || a.degree() < b.degree() {
        return a.clone();
    }
    let delta = a.degree() - b.degree() + 1;
    // Use an even power when lc(b) is negative, keeping the scale positive.
    let pow = if b.leading().is_negative() && delta % 2 == 1 {
        delta + 1
    } else {
        delta
    };
    let mut scale = BigInt::from(1);
    for _ in 0..pow {
        scale *= b.leading();
    }
    debug_assert!(scale.is_positive());
    let mut rem: Vec<BigInt> = a.coeffs().iter().map(|c| c * &scale).collect();
    let db = b.degree();
    while rem.len() > db {
        let lead = rem.last().unwrap().clone();
        if lead.is_zero() {
            rem.pop();
            continue;
        }
        let q = &lead / b.leading();
        debug_assert!((&lead % b.leading()).is_zero());
        let shift = rem.len() - 1 - db;
        for (j, bc) in b.coeffs().iter().enumerate() {
            rem[shift + j] -= &q * bc;
        }
        while rem.last().is_some_and(|c| c.is_zero()) {
            rem.pop();
        }
    }
    IntPolynomial::from_coeffs(rem)
}

/// Primitive gcd of two integer polynomials (positive leading
/// coefficient). Exact; no floating point, no rational coefficients.
pub fn poly_gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let mut f = primitive_positive(a);
    let mut g = primitive_positive(b);
    if f.is_zero() {
        return g;
    }
    if g.is_zero() {
        return f;
    }
    if f.degree() < g.degree() {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_zero() {
        let r = pseudo_rem_positive(&f, &g);
        f = g;
        g = primitive_positive(&r);
    }
    f
}

/// True iff gcd(P, P') is constant, i.e. P has no repeated complex roots.
pub fn is_squarefree(p: &IntPolynomial) -> bool {
    assert!(!p.is_zero());
    if p.degree() == 0 {
        return true;
    }
    poly_gcd(p, &p.derivative()).degree() == 0
}

/// `P / gcd(P, P')`: same distinct roots, all simple.
pub fn squarefree_part(p: &IntPolynomial) -> IntPolynomial {
    assert!(!p.is_zero());
    if p.degree() == 0 {
        return IntPolynomial::one();
    }
    let g = poly_gcd(p, &p.derivative());
    if g.degree() == 0 {
        return p.clone();
    }
    primitive_positive(p)
        .div_exact(&g)
        .expect("gcd divides the primitive part")
}

/// Sturm chain of a squarefree polynomial: f, f', then negated
/// pseudo-remainders with positive scaling.
fn sturm_chain(p: &IntPolynomial) -> Vec<IntPolynomial> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        if chain[n - 1].degree() == 0 {
            break;
        }
        let r = pseudo_rem_positive(&chain[n - 2], &chain[n - 1]);
        chain.push(primitive_keep_sign(&r).neg());
    }
    chain
}

fn sign_variations<I: Iterator<Item = i8>>(signs: I) -> usize {
    let mut count = 0;
    let mut last: i8 = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sign_of_rational(x: &BigRational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Number of distinct real roots of P in the half-open interval (a, +inf).
pub fn count_real_roots_above(p: &IntPolynomial, a: &BigRational) -> usize {
    let sf = squarefree_part(p);
    if sf.degree() == 0 {
        return 0;
    }
    let chain = sturm_chain(&sf);
    let at_a = sign_variations(chain.iter().map(|f| sign_of_rational(&f.evaluate(a))));
    let at_inf = sign_variations(chain.iter().map(|f| {
        if f.is_zero() {
            0
        } else if f.leading().is_positive() {
            1
        } else {
            -1
        }
    }));
    at_a - at_inf
}

/// Number of distinct real roots of P in the half-open interval (a, b].
pub fn count_real_roots_in(p: &IntPolynomial, a: &BigRational, b: &BigRational) -> usize {
    assert!(a <= b);
    let sf = squarefree_part(p);
    if sf.degree() == 0 {
        return 0;
    }
    let chain = sturm_chain(&sf);
    let at_a = sign_variations(chain.iter().map(|f| sign_of_rational(&f.evaluate(a))));
    let at_b = sign_variations(chain.iter().map(|f| sign_of_rational(&f.evaluate(b))));
    at_a - at_b
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn poly(v: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(v)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn squarefree_examples() {
        assert!(!is_squarefree(&poly(&[1, -2, 1]))); // (x-1)^2
        assert!(is_squarefree(&poly(&[-1, -1, -1, 1])));
        // (x^2-x-1)(x^2-1): distinct factors, all roots simple.
        let p = poly(&[-1, -1, 1]).mul(&poly(&[-1, 0, 1]));
        assert!(is_squarefree(&p));
    }

    #[test]
    fn gcd_detects_common_factor() {
        let a = poly(&[-1, -1, 1]).mul(&poly(&[1, 1]));
        let b = poly(&[-1, 0, 1]);
        assert_eq!(poly_gcd(&a, &b), poly(&[1, 1]));
    }

    #[test]
    fn root_counting() {
        // x^2 - x - 1 has one root above 1 (the golden ratio).
        let p = poly(&[-1, -1, 1]);
        assert_eq!(count_real_roots_above(&p, &BigRational::one()), 1);
        assert_eq!(count_real_roots_above(&p, &rat(2, 1)), 0);
        assert_eq!(count_real_roots_in(&p, &rat(1, 1), &rat(2, 1)), 1);

        // x^3 - x^2 - x - 1: Perron root ~1.8393.
        let p = poly(&[-1, -1, -1, 1]);
        assert_eq!(count_real_roots_above(&p, &rat(9, 5)), 1);
        assert_eq!(count_real_roots_above(&p, &rat(46, 25)), 0);

        // x^11 - 1 has no root above 1 (1 itself is excluded by openness).
        let mut v = vec![0i64; 12];
        v[0] = -1;
        v[11] = 1;
        assert_eq!(count_real_roots_above(&poly(&v), &BigRational::one()), 0);

        // Multiple roots are counted once.
        let p = poly(&[1, -2, 1]).mul(&poly(&[-2, 1])); // (x-1)^2 (x-2)
        assert_eq!(count_real_roots_above(&p, &rat(1, 2)), 2);
    }
}
