//! Cyclotomic polynomial inventory and trial division.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::One;

use crate::poly::IntPolynomial;

/// Upper bound on phi(m) for the precomputed inventory; covers every
/// degree the pipeline encounters (<= 24) with headroom.
pub const PHI_LIMIT: usize = 30;

fn euler_phi(m: usize) -> usize {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// All (m, Phi_m) with phi(m) <= PHI_LIMIT, ascending in m. Phi_m is
/// computed by exact division of x^m - 1 by the product of Phi_d over
/// proper divisors d of m; phi(d) divides phi(m), so every needed divisor
/// is already in the inventory.
pub fn cyclotomic_inventory() -> &'static [(usize, IntPolynomial)] {
    static INVENTORY: OnceLock<Vec<(usize, IntPolynomial)>> = OnceLock::new();
    INVENTORY.get_or_init(|| {
        // phi(m) >= sqrt(m/2), so phi(m) <= 30 forces m <= 1800.
        let mut inv: Vec<(usize, IntPolynomial)> = Vec::new();
        for m in 1..=1800usize {
            if euler_phi(m) > PHI_LIMIT {
                continue;
            }
            let mut xm1 = vec![BigInt::from(0); m + 1];
            xm1[0] = BigInt::from(-1);
            xm1[m] = BigInt::one();
            let mut quotient = IntPolynomial::from_coeffs(xm1);
            for (d, phi_d) in &inv {
                if m % d == 0 && *d < m {
                    quotient = quotient
                        .div_exact(phi_d)
                        .expect("cyclotomic division is exact");
                }
            }
            inv.push((m, quotient));
        }
        inv
    })
}

/// Returns Phi_m; panics if m is outside the precomputed inventory.
pub fn cyclotomic(m: usize) -> &'static IntPolynomial {
    cyclotomic_inventory()
        .iter()
        .find(|(idx, _)| *idx == m)
        .map(|(_, p)| p)
        .unwrap_or_else(|| panic!("Phi_{m} outside inventory (phi(m) > {PHI_LIMIT})"))
}

/// Repeatedly trial-divides by every cyclotomic polynomial Phi_m with
/// phi(m) <= deg(P) until none divides exactly; returns the quotient and
/// the multiset of indices m removed (ascending passes, so deterministic).
pub fn strip_cyclotomic(p: &IntPolynomial) -> (IntPolynomial, Vec<usize>) {
    assert!(p.is_monic(), "strip_cyclotomic expects a monic polynomial");
    let mut current = p.clone();
    let mut removed: Vec<usize> = Vec::new();
    'outer: loop {
        if current.degree() == 0 {
            break;
        }
        for (m, phi) in cyclotomic_inventory() {
            if phi.degree() > current.degree() {
                continue;
            }
            if let Some(q) = current.div_exact(phi) {
                removed.push(*m);
                current = q;
                continue 'outer;
            }
        }
        break;
    }
    (current, removed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(v: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(v)
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(*cyclotomic(1), poly(&[-1, 1]));
        assert_eq!(*cyclotomic(2), poly(&[1, 1]));
        assert_eq!(*cyclotomic(3), poly(&[1, 1, 1]));
        assert_eq!(*cyclotomic(4), poly(&[1, 0, 1]));
        assert_eq!(*cyclotomic(6), poly(&[1, -1, 1]));
        assert_eq!(*cyclotomic(12), poly(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn inventory_is_complete_for_small_degrees() {
        let inv = cyclotomic_inventory();
        assert!(inv.iter().any(|(m, _)| *m == 90)); // phi(90) = 24
        assert!(inv.iter().all(|(_, p)| p.degree() <= PHI_LIMIT));
    }

    #[test]
    fn strip_examples() {
        // x^6 - x^4 - x^3 - x^2 - 1 = (x^2+x+1)(x^4-x^3-x^2+x-1)
        let p = poly(&[-1, 0, -1, -1, -1, 0, 1]);
        let (q, factors) = strip_cyclotomic(&p);
        assert_eq!(q, poly(&[-1, 1, -1, -1, 1]));
        assert_eq!(factors, vec![3]);

        // x^4 - x^3 - x - 1 = (x^2+1)(x^2-x-1)
        let p = poly(&[-1, -1, 0, -1, 1]);
        let (q, factors) = strip_cyclotomic(&p);
        assert_eq!(q, poly(&[-1, -1, 1]));
        assert_eq!(factors, vec![4]);

        // x^3 - x^2 - x - 1 is cyclotomic-free.
        let p = poly(&[-1, -1, -1, 1]);
        let (q, factors) = strip_cyclotomic(&p);
        assert_eq!(q, p);
        assert!(factors.is_empty());
    }
}
