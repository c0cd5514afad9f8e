//! Exact integer polynomial arithmetic.
//!
//! Polynomials are dense sequences of `BigInt` coefficients in ascending
//! degree order. All arithmetic is exact; nothing here touches floating
//! point.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::PolyError;

/// Dense integer polynomial, coefficients in ascending degree order
/// (index `i` holds the coefficient of `x^i`). The leading coefficient is
/// nonzero unless the polynomial is zero (empty coefficient vector).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros so the leading coefficient invariant holds.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `deg 0 = 0` for nonzero constants. Panics on the zero
    /// polynomial; callers check `is_zero` first.
    pub fn degree(&self) -> usize {
        assert!(!self.coeffs.is_empty(), "degree of zero polynomial");
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("leading of zero polynomial")
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn neg(&self) -> Self {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Exact division: returns the quotient when `divisor` divides `self`
    /// with zero remainder over the integers, `None` otherwise.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.degree() < divisor.degree() {
            return None;
        }
        let dl = divisor.leading();
        let mut rem = self.coeffs.clone();
        let qdeg = self.degree() - divisor.degree();
        let mut quot = vec![BigInt::zero(); qdeg + 1];
        for qi in (0..=qdeg).rev() {
            let lead = rem[qi + divisor.degree()].clone();
            if lead.is_zero() {
                continue;
            }
            if (&lead % dl) != BigInt::zero() {
                return None;
            }
            let q = &lead / dl;
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[qi + j] -= &q * dc;
            }
            quot[qi] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(quot))
    }

    /// Exact evaluation at a rational point (Horner).
    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    /// Exact evaluation of the derivative at a rational point.
    pub fn evaluate_derivative(&self, x: &BigRational) -> BigRational {
        self.derivative().evaluate(x)
    }

    pub fn evaluate_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Coefficients as `f64`, ascending. Exact for |c| < 2^53.
    pub fn coeffs_f64(&self) -> Vec<f64> {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .map(|c| c.to_f64().expect("coefficient out of f64 range"))
            .collect()
    }

    /// `x_0 = 1 + max |a_i|` over the non-leading coefficients; exceeds the
    /// modulus of every root of a monic polynomial.
    pub fn cauchy_root_bound(&self) -> BigRational {
        assert!(self.is_monic());
        let mut m = BigInt::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let a = c.abs();
            if a > m {
                m = a;
            }
        }
        BigRational::from(m + BigInt::one())
    }

    /// The reciprocal polynomial `± x^d P(1/x)`, sign chosen to keep the
    /// result monic. Requires constant term ±1.
    pub fn reciprocal_transform(&self) -> Result<Self, PolyError> {
        if self.is_zero() || !self.constant_term().abs().is_one() {
            return Err(PolyError::ConstantTermNotUnit);
        }
        let mut rev: Vec<BigInt> = self.coeffs.iter().rev().cloned().collect();
        if rev.last().unwrap().is_negative() {
            for c in &mut rev {
                *c = -&*c;
            }
        }
        Ok(Self::from_coeffs(rev))
    }

    /// `p(-x)` normalized to be monic (i.e. `p(-x)` or `-p(-x)`).
    pub fn substitute_negate(&self) -> Self {
        let mut out: Vec<BigInt> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        if out.last().is_some_and(|c| c.is_negative()) {
            for c in &mut out {
                *c = -&*c;
            }
        }
        Self::from_coeffs(out)
    }

    /// Divides out all factors `x - 1` and `x + 1` by exact synthetic
    /// division; returns the reduced polynomial and the multiplicities
    /// removed.
    pub fn strip_unit_roots(&self) -> (Self, UnitRootMultiplicities) {
        let mut p = self.clone();
        let mut removed = UnitRootMultiplicities::default();
        if p.is_zero() {
            return (p, removed);
        }
        let one = BigInt::one();
        let minus_one = -BigInt::one();
        loop {
            if !p.is_zero() && p.evaluate_int(&one).is_zero() {
                p = p
                    .div_exact(&IntPolynomial::from_i64s(&[-1, 1]))
                    .expect("synthetic division by x-1");
                removed.x_minus_one += 1;
                continue;
            }
            if !p.is_zero() && p.evaluate_int(&minus_one).is_zero() {
                p = p
                    .div_exact(&IntPolynomial::from_i64s(&[1, 1]))
                    .expect("synthetic division by x+1");
                removed.x_plus_one += 1;
                continue;
            }
            break;
        }
        (p, removed)
    }

    /// Human-readable form like `x^3 - x^2 - x - 1`.
    pub fn to_expr_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let var = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            let body = if i == 0 {
                format!("{mag}")
            } else if mag.is_one() {
                var
            } else {
                format!("{mag}{var}")
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() {
                    format!("-{body}")
                } else {
                    body
                });
            } else {
                parts.push(format!("{} {body}", if c.is_negative() { "-" } else { "+" }));
            }
        }
        parts.join(" ")
    }
}

/// Multiplicities of the factors `x - 1` and `x + 1` removed by
/// [`IntPolynomial::strip_unit_roots`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct UnitRootMultiplicities {
    pub x_minus_one: usize,
    pub x_plus_one: usize,
}

/// Canonical text form: ascending comma-separated integer coefficients,
/// e.g. `-1,-1,-1,1` for x^3 - x^2 - x - 1.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let strs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_expr_string())
    }
}

impl FromStr for IntPolynomial {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let coeffs: Result<Vec<BigInt>, _> = s
            .split(',')
            .map(|t| t.trim().parse::<BigInt>())
            .collect();
        match coeffs {
            Ok(v) => Ok(Self::from_coeffs(v)),
            Err(_) => Err(PolyError::ParseError(s.to_string())),
        }
    }
}

/// Symmetry classes of integer polynomials under coefficient reversal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetryClass {
    /// `p(x) = ± x^d p(1/x)`: palindromic coefficients up to a global sign.
    Reciprocal,
    /// `p(x) = ± x^d p(-1/x)`.
    SkewReciprocal,
    Neither,
}

/// Result of [`classify_symmetry`]: the exact symmetry class plus the
/// mod-2 reciprocity flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Symmetry {
    pub class: SymmetryClass,
    pub mod2_reciprocal: bool,
}

/// Exact coefficient tests for reciprocity and skew-reciprocity. A
/// polynomial satisfying both (e.g. one in `x^2` alone) reports
/// `Reciprocal`.
pub fn classify_symmetry(p: &IntPolynomial) -> Symmetry {
    assert!(!p.is_zero(), "symmetry of zero polynomial");
    let d = p.degree();
    let a = p.coeffs();

    let recip_plus = (0..=d).all(|i| a[i] == a[d - i]);
    let recip_minus = (0..=d).all(|i| a[i] == -&a[d - i]);
    let skew = |sign: i64| {
        (0..=d).all(|i| {
            let mut rhs = a[d - i].clone();
            if (d - i) % 2 == 1 {
                rhs = -rhs;
            }
            if sign < 0 {
                rhs = -rhs;
            }
            a[i] == rhs
        })
    };

    let class = if recip_plus || recip_minus {
        SymmetryClass::Reciprocal
    } else if skew(1) || skew(-1) {
        SymmetryClass::SkewReciprocal
    } else {
        SymmetryClass::Neither
    };

    let mod2 = (0..=d).all(|i| ((&a[i] - &a[d - i]) % BigInt::from(2)).is_zero());
    Symmetry {
        class,
        mod2_reciprocal: mod2,
    }
}

/// Power sums `p_1..p_m` of the roots of a monic degree-`d` polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSums {
    pub values: Vec<BigInt>,
    pub source_degree: usize,
}

/// Newton coefficients of a monic polynomial written as
/// `P(x) = x^d - c_1 x^{d-1} - ... - c_{d-1} x - c_d`, so `c_i = -a_{d-i}`.
pub fn newton_coefficients(p: &IntPolynomial) -> Result<Vec<BigInt>, PolyError> {
    if p.is_zero() || !p.is_monic() {
        return Err(PolyError::NonMonic);
    }
    let d = p.degree();
    Ok((1..=d).map(|i| -p.coeff(d - i)).collect())
}

/// Power sums of the roots from the coefficients, by Newton's identity
///
/// `p_k = c_1 p_{k-1} + c_2 p_{k-2} + ... + c_{k-1} p_1 + k c_k`
///
/// in the sign convention above. This is the recurrence consistent with the
/// root-sum definition `p_k = sum z_i^k`; the sanity anchor is
/// `p_1 = c_1 = -a_{d-1}` = trace of the companion matrix.
pub fn power_sums_from_coefficients(
    p: &IntPolynomial,
    m: usize,
) -> Result<PowerSums, PolyError> {
    if p.is_zero() || !p.is_monic() {
        return Err(PolyError::NonMonic);
    }
    let d = p.degree();
    assert!(m + 1 <= d || m == 0, "power sum count m={m} exceeds d-1={}", d.saturating_sub(1));
    let c = newton_coefficients(p)?;
    Ok(PowerSums {
        values: power_sums_from_newton(&c, m),
        source_degree: d,
    })
}

/// Forward recurrence on Newton coefficients `c_1..c_j` (valid for
/// `m <= j`, with `m <= d` overall).
pub fn power_sums_from_newton(c: &[BigInt], m: usize) -> Vec<BigInt> {
    let mut ps: Vec<BigInt> = Vec::with_capacity(m);
    for k in 1..=m {
        let mut acc = &c[k - 1] * BigInt::from(k);
        for i in 1..k {
            acc += &c[i - 1] * &ps[k - i - 1];
        }
        ps.push(acc);
    }
    ps
}

/// Outcome of inverting Newton's identity: either the Newton coefficients
/// `c_1..c_j`, or the first index where the numerator fails to be divisible
/// by `k`. Divisibility failure is the search's pruning signal, a normal
/// reported outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NewtonInversion {
    Coefficients(Vec<BigInt>),
    DivisibilityFailure { at: usize },
}

/// Newton coefficients from power sums, via
/// `c_k = (p_k - c_1 p_{k-1} - ... - c_{k-1} p_1) / k`.
pub fn coefficients_from_power_sums(ps: &PowerSums, d: usize) -> NewtonInversion {
    let j = ps.values.len();
    assert!(j + 1 <= d, "prefix length {j} exceeds d-1 = {}", d - 1);
    let mut cs: Vec<BigInt> = Vec::with_capacity(j);
    for k in 1..=j {
        let mut num = ps.values[k - 1].clone();
        for i in 1..k {
            num -= &cs[i - 1] * &ps.values[k - i - 1];
        }
        let kk = BigInt::from(k);
        if (&num % &kk) != BigInt::zero() {
            return NewtonInversion::DivisibilityFailure { at: k };
        }
        cs.push(num / kk);
    }
    NewtonInversion::Coefficients(cs)
}

/// Assembles `x^d - c_1 x^{d-1} - ... - c_{d-1} x - c_d` from Newton
/// coefficients.
pub fn polynomial_from_newton(c: &[BigInt], d: usize) -> IntPolynomial {
    assert_eq!(c.len(), d);
    let mut coeffs = vec![BigInt::zero(); d + 1];
    coeffs[d] = BigInt::one();
    for (i, ci) in c.iter().enumerate() {
        coeffs[d - (i + 1)] = -ci;
    }
    IntPolynomial::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(v: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(v)
    }

    #[test]
    fn evaluate_exact() {
        // x^3 - x^2 - x - 1 at 2 -> 1; x^2 - x - 1 at 0 -> -1
        let p = poly(&[-1, -1, -1, 1]);
        assert_eq!(
            p.evaluate(&BigRational::from(BigInt::from(2))),
            BigRational::from(BigInt::from(1))
        );
        let q = poly(&[-1, -1, 1]);
        assert_eq!(
            q.evaluate(&BigRational::zero()),
            BigRational::from(BigInt::from(-1))
        );
    }

    #[test]
    fn evaluate_sign_below_perron_root() {
        // 9/5 = 1.8 < 1.83929, so P(9/5) < 0 for P = x^3-x^2-x-1.
        let p = poly(&[-1, -1, -1, 1]);
        let x = BigRational::new(BigInt::from(9), BigInt::from(5));
        assert!(p.evaluate(&x) < BigRational::zero());
        // Derivative is positive there.
        assert!(p.evaluate_derivative(&x) > BigRational::zero());
    }

    #[test]
    fn power_sums_examples() {
        // x^2 - x - 1: roots (1 ± sqrt 5)/2, p_1 = 1, p_2 = 3.
        let p = poly(&[-1, -1, 1]);
        let ps = power_sums_from_coefficients(&p, 1).unwrap();
        assert_eq!(ps.values, vec![BigInt::from(1)]);
        // p_2 need m = 2 > d-1; compute via newton coefficients directly.
        let c = newton_coefficients(&p).unwrap();
        assert_eq!(power_sums_from_newton(&c, 2), vec![BigInt::from(1), BigInt::from(3)]);

        // x^3 - 1: cube roots of unity, p_1 = p_2 = 0.
        let q = poly(&[-1, 0, 0, 1]);
        let ps = power_sums_from_coefficients(&q, 2).unwrap();
        assert_eq!(ps.values, vec![BigInt::zero(), BigInt::zero()]);

        // x^3 - x^2 - x - 1: p_1 = 1, p_2 = 3.
        let t = poly(&[-1, -1, -1, 1]);
        let ps = power_sums_from_coefficients(&t, 2).unwrap();
        assert_eq!(ps.values, vec![BigInt::from(1), BigInt::from(3)]);
    }

    #[test]
    fn newton_inversion_parity() {
        // (p_1, p_2) = (1, 1) at d = 3: integer c_1, c_2 exist.
        let ps = PowerSums {
            values: vec![BigInt::from(1), BigInt::from(1)],
            source_degree: 3,
        };
        assert!(matches!(
            coefficients_from_power_sums(&ps, 3),
            NewtonInversion::Coefficients(_)
        ));
        // (1, 2): mixed parity fails at k = 2.
        let ps = PowerSums {
            values: vec![BigInt::from(1), BigInt::from(2)],
            source_degree: 3,
        };
        assert_eq!(
            coefficients_from_power_sums(&ps, 3),
            NewtonInversion::DivisibilityFailure { at: 2 }
        );
        // (0, 0): all-zero prefix.
        let ps = PowerSums {
            values: vec![BigInt::zero(), BigInt::zero()],
            source_degree: 3,
        };
        assert_eq!(
            coefficients_from_power_sums(&ps, 3),
            NewtonInversion::Coefficients(vec![BigInt::zero(), BigInt::zero()])
        );
    }

    #[test]
    fn symmetry_examples() {
        let s = classify_symmetry(&poly(&[1, -1, -1, -1, 1]));
        assert_eq!(s.class, SymmetryClass::Reciprocal);

        let s = classify_symmetry(&poly(&[-1, -1, 1]));
        assert_eq!(s.class, SymmetryClass::SkewReciprocal);

        let s = classify_symmetry(&poly(&[-1, -1, -1, 1]));
        assert_eq!(s.class, SymmetryClass::Neither);
        assert!(s.mod2_reciprocal);
    }

    #[test]
    fn reciprocal_transform_examples() {
        let p = poly(&[-1, -1, -1, 1]);
        assert_eq!(p.reciprocal_transform().unwrap(), poly(&[-1, 1, 1, 1]));
        let q = poly(&[-1, -1, 1]);
        assert_eq!(q.reciprocal_transform().unwrap(), poly(&[-1, 1, 1]));
        // Constant term not a unit is an error.
        assert!(poly(&[2, 1]).reciprocal_transform().is_err());
    }

    #[test]
    fn substitute_negate_examples() {
        assert_eq!(poly(&[-1, -1, 1]).substitute_negate(), poly(&[-1, 1, 1]));
        assert_eq!(
            poly(&[-1, -1, -1, 1]).substitute_negate(),
            poly(&[1, -1, 1, 1])
        );
        // Even polynomial is a fixed point.
        assert_eq!(poly(&[1, 0, 0, 0, 1]).substitute_negate(), poly(&[1, 0, 0, 0, 1]));
    }

    #[test]
    fn strip_unit_roots_examples() {
        let base = poly(&[-1, 0, 0, -1, -1, 0, 0, 1]); // x^7 - x^4 - x^3 - 1
        let prod = base.mul(&poly(&[-1, 1]));
        let (reduced, removed) = prod.strip_unit_roots();
        assert_eq!(reduced, base);
        assert_eq!(removed.x_minus_one, 1);
        assert_eq!(removed.x_plus_one, 0);

        let (reduced, removed) = poly(&[-1, 0, 1]).strip_unit_roots();
        assert_eq!(reduced, IntPolynomial::one());
        assert_eq!((removed.x_minus_one, removed.x_plus_one), (1, 1));

        let p = poly(&[-1, -1, -1, 1]);
        let (reduced, removed) = p.strip_unit_roots();
        assert_eq!(reduced, p);
        assert_eq!(removed, UnitRootMultiplicities::default());
    }

    #[test]
    fn canonical_text_round_trip() {
        let p = poly(&[-1, -1, -1, 1]);
        assert_eq!(p.to_string(), "-1,-1,-1,1");
        assert_eq!("-1,-1,-1,1".parse::<IntPolynomial>().unwrap(), p);
        assert_eq!(p.to_expr_string(), "x^3 - x^2 - x - 1");
    }

    #[test]
    fn div_exact_rejects_non_divisor() {
        let p = poly(&[-1, -1, -1, 1]);
        assert!(p.div_exact(&poly(&[1, 1])).is_none());
        let prod = p.mul(&poly(&[1, 1, 1]));
        assert_eq!(prod.div_exact(&poly(&[1, 1, 1])).unwrap(), p);
    }
}
