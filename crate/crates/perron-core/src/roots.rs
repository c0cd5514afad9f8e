//! Perron-root isolation and complex root computation, with conservative
//! never-wrongly-discard semantics.
//!
//! The split of responsibilities: square-freeness, multiplicity of the
//! leading root, and the final root-vs-bound comparison are resolved in
//! exact arithmetic (see [`crate::sturm`]); modulus comparisons are
//! numerical with a safety margin, and anything inside the margin is
//! reported as ambiguous so the caller retains the polynomial.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::poly::IntPolynomial;
use crate::sturm::{count_real_roots_above, is_squarefree, poly_gcd};

/// Verdict of a numerical filter: definite only when the margin is
/// cleared, ambiguous otherwise. Ambiguous never discards.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TriState {
    Yes,
    No,
    Ambiguous,
}

impl TriState {
    pub fn is_no(self) -> bool {
        self == TriState::No
    }
    pub fn is_ambiguous(self) -> bool {
        self == TriState::Ambiguous
    }
    fn from_margin(pass: bool, definite: bool) -> TriState {
        match (pass, definite) {
            (true, true) => TriState::Yes,
            (false, true) => TriState::No,
            (_, false) => TriState::Ambiguous,
        }
    }
}

/// Numerical safety parameters.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct Margins {
    /// Relative margin separating definite verdicts from ambiguous ones.
    pub relative: f64,
    /// Convergence threshold for the Newton descent.
    pub newton_epsilon: f64,
    /// Iteration cap for the Newton descent.
    pub newton_max_iters: usize,
}

impl Default for Margins {
    fn default() -> Self {
        Margins {
            relative: 1e-9,
            newton_epsilon: 1e-12,
            newton_max_iters: 200,
        }
    }
}

/// Outcome of the monotone Newton descent from the Cauchy bound.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum NewtonDescent {
    /// Successive iterates got within `newton_epsilon`; the limit is the
    /// largest real root when the descent contract held throughout.
    Converged(f64),
    /// The iterate sequence failed to be strictly decreasing while staying
    /// above 1, or the derivative stopped being positive.
    Rejected(NewtonReject),
    /// Iteration cap reached; treated as NOT rejected (conservative).
    Ambiguous,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NewtonReject {
    NotDecreasing,
    DerivativeNotPositive,
    LeftUpperHalfLine,
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    let mut acc = 0.0;
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn horner_c(coeffs: &[f64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

/// Newton's method started at `x_0 = 1 + max |c_i|`, which exceeds every
/// root modulus. On the half-line above the largest real root the
/// polynomial is positive with positive derivative, so the iterates must
/// decrease strictly while staying above 1; any violation rejects the
/// polynomial.
pub fn newton_descent(p: &IntPolynomial, margins: &Margins) -> NewtonDescent {
    assert!(p.is_monic() && p.degree() >= 2);
    let coeffs = p.coeffs_f64();
    let deriv: Vec<f64> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * i as f64)
        .collect();
    let mut x = 1.0
        + coeffs[..coeffs.len() - 1]
            .iter()
            .fold(0.0f64, |m, c| m.max(c.abs()));
    for _ in 0..margins.newton_max_iters {
        let fp = horner(&deriv, x);
        if fp <= 0.0 {
            return NewtonDescent::Rejected(NewtonReject::DerivativeNotPositive);
        }
        let f = horner(&coeffs, x);
        let next = x - f / fp;
        if (x - next).abs() < margins.newton_epsilon {
            return NewtonDescent::Converged(next);
        }
        if next >= x {
            return NewtonDescent::Rejected(NewtonReject::NotDecreasing);
        }
        if next <= 1.0 {
            return NewtonDescent::Rejected(NewtonReject::LeftUpperHalfLine);
        }
        x = next;
    }
    NewtonDescent::Ambiguous
}

/// All complex roots with a residual guarantee.
#[derive(Clone, Debug)]
pub struct RootSet {
    /// Sorted by (re, im); non-real roots come in exact conjugate pairs.
    pub roots: Vec<Complex64>,
    /// max over roots of |P(z)| / (sum_i |a_i| max(1,|z|)^i).
    pub max_rel_residual: f64,
}

/// Root computation failed to converge; callers treat the polynomial as
/// ambiguous and retain it.
#[derive(Clone, Debug, thiserror::Error)]
#[error("root finding did not converge (residual {max_rel_residual:e})")]
pub struct RootsError {
    pub partial: Vec<Complex64>,
    pub max_rel_residual: f64,
}

const ROOT_RESIDUAL_OK: f64 = 1e-8;

/// Simultaneous (Aberth-Ehrlich) iteration for all roots, followed by a
/// Newton polish and conjugate-pair symmetrization. Deterministic: fixed
/// initial configuration, no randomness, no global state.
pub fn all_roots(p: &IntPolynomial) -> Result<RootSet, RootsError> {
    assert!(!p.is_zero());
    let d = p.degree();
    if d == 0 {
        return Ok(RootSet {
            roots: vec![],
            max_rel_residual: 0.0,
        });
    }
    let coeffs = p.coeffs_f64();
    let lead = *coeffs.last().unwrap();
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
    if d == 1 {
        let root = Complex64::new(-monic[0], 0.0);
        return Ok(RootSet {
            max_rel_residual: rel_residual(&monic, root),
            roots: vec![root],
        });
    }
    let deriv: Vec<f64> = monic
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * i as f64)
        .collect();

    // Initial guesses on a circle inside the Cauchy bound, angle-offset to
    // avoid symmetry stalls, with the centroid as the center.
    let center = -monic[d - 1] / d as f64;
    let radius = 1.0 + monic[..d].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut z: Vec<Complex64> = (0..d)
        .map(|j| {
            let theta = 2.0 * std::f64::consts::PI * (j as f64 + 0.25) / d as f64 + 0.3;
            let r = radius * (0.6 + 0.35 * (j as f64 + 1.0) / d as f64);
            Complex64::new(center, 0.0) + Complex64::from_polar(r, theta)
        })
        .collect();

    let mut converged = false;
    for _ in 0..500 {
        let mut max_step: f64 = 0.0;
        for i in 0..d {
            let f = horner_c(&monic, z[i]);
            let fp = horner_c(&deriv, z[i]);
            let newton = if fp.norm_sqr() > 0.0 {
                f / fp
            } else {
                Complex64::new(1e-6, 1e-6)
            };
            let mut s = Complex64::new(0.0, 0.0);
            for (j, zj) in z.iter().enumerate() {
                if j != i {
                    let diff = z[i] - zj;
                    if diff.norm_sqr() > 0.0 {
                        s += diff.inv();
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * s;
            let w = if denom.norm_sqr() > 1e-12 {
                newton / denom
            } else {
                newton
            };
            z[i] -= w;
            max_step = max_step.max(w.norm() / z[i].norm().max(1.0));
        }
        if max_step < 1e-14 {
            converged = true;
            break;
        }
    }

    // Newton polish.
    for zi in z.iter_mut() {
        for _ in 0..4 {
            let fp = horner_c(&deriv, *zi);
            if fp.norm_sqr() == 0.0 {
                break;
            }
            *zi -= horner_c(&monic, *zi) / fp;
        }
    }

    // Snap near-real roots onto the axis, then enforce exact conjugate
    // pairs (the coefficients are real).
    let tol = |zi: &Complex64| 1e-9 * (1.0 + zi.norm());
    for zi in z.iter_mut() {
        if zi.im.abs() < tol(zi) {
            zi.im = 0.0;
        }
    }
    let mut ups: Vec<Complex64> = z.iter().copied().filter(|c| c.im > 0.0).collect();
    let downs: Vec<Complex64> = z.iter().copied().filter(|c| c.im < 0.0).collect();
    let reals: Vec<Complex64> = z.iter().copied().filter(|c| c.im == 0.0).collect();
    let paired_ok = ups.len() == downs.len();
    let mut roots: Vec<Complex64> = reals;
    if paired_ok {
        let mut remaining = downs;
        ups.sort_by(|a, b| (a.re, a.im).partial_cmp(&(b.re, b.im)).unwrap());
        for up in ups {
            let (idx, _) = remaining
                .iter()
                .enumerate()
                .min_by(|(_, a), (_, b)| {
                    (up - a.conj())
                        .norm()
                        .partial_cmp(&(up - b.conj()).norm())
                        .unwrap()
                })
                .expect("down-half root available");
            let down = remaining.swap_remove(idx);
            let avg = (up + down.conj()) / 2.0;
            roots.push(avg);
            roots.push(avg.conj());
        }
    } else {
        roots = z.clone();
    }
    roots.sort_by(|a, b| (a.re, a.im).partial_cmp(&(b.re, b.im)).unwrap());

    let max_rel_residual = roots
        .iter()
        .map(|&zi| rel_residual(&monic, zi))
        .fold(0.0f64, f64::max);

    if !paired_ok || (!converged && max_rel_residual > ROOT_RESIDUAL_OK) {
        return Err(RootsError {
            partial: roots,
            max_rel_residual,
        });
    }
    Ok(RootSet {
        roots,
        max_rel_residual,
    })
}

fn rel_residual(monic: &[f64], z: Complex64) -> f64 {
    let value = horner_c(monic, z).norm();
    let m = z.norm().max(1.0);
    let mut scale = 0.0;
    let mut pw = 1.0;
    for c in monic {
        scale += c.abs() * pw;
        pw *= m;
    }
    value / scale.max(1.0)
}

/// Which roots the annulus test exempts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AnnulusMode {
    /// Exempts only the Perron root itself.
    Nonorientable,
    /// Additionally exempts one root at `-lambda^{-1}`, which the
    /// skew-reciprocity of the candidate guarantees to exist.
    Reversing,
}

/// Filter verdicts for one polynomial, tri-stated.
#[derive(Clone, Debug)]
pub struct RootProfile {
    pub perron_value: f64,
    pub perron_converged: bool,
    pub dominant_is_real: TriState,
    pub simple: TriState,
    pub annulus_ok: TriState,
    pub below_bound: TriState,
    pub roots: Vec<Complex64>,
    pub max_rel_residual: f64,
}

impl RootProfile {
    pub fn all_pass(&self) -> bool {
        !self.dominant_is_real.is_no()
            && !self.simple.is_no()
            && !self.annulus_ok.is_no()
            && !self.below_bound.is_no()
    }

    pub fn has_ambiguity(&self) -> bool {
        !self.perron_converged
            || self.dominant_is_real.is_ambiguous()
            || self.simple.is_ambiguous()
            || self.annulus_ok.is_ambiguous()
            || self.below_bound.is_ambiguous()
    }
}

/// Populates the filter verdicts for a polynomial whose Newton descent
/// converged to `lambda`.
///
/// - dominant-real and annulus verdicts compare moduli numerically with
///   the configured margin;
/// - the multiplicity verdict is exact (square-freeness, plus a Sturm
///   check on gcd(P, P') when needed);
/// - the bound verdict is exact: P has a real root above r iff the Sturm
///   count over (r, inf) is nonzero.
pub fn perron_profile(
    p: &IntPolynomial,
    lambda: f64,
    r: &BigRational,
    mode: AnnulusMode,
    margins: &Margins,
) -> RootProfile {
    let m = margins.relative;
    let (roots, max_rel_residual, roots_ok) = match all_roots(p) {
        Ok(rs) => (rs.roots, rs.max_rel_residual, true),
        Err(e) => (e.partial, e.max_rel_residual, false),
    };

    if !roots_ok {
        return RootProfile {
            perron_value: lambda,
            perron_converged: false,
            dominant_is_real: TriState::Ambiguous,
            simple: TriState::Ambiguous,
            annulus_ok: TriState::Ambiguous,
            below_bound: below_bound_exact(p, r),
            roots,
            max_rel_residual,
        };
    }

    // Largest modulus among definitely-non-real roots vs lambda.
    let max_nonreal = roots
        .iter()
        .filter(|z| z.im.abs() > m * (1.0 + z.norm()))
        .map(|z| z.norm())
        .fold(f64::NEG_INFINITY, f64::max);
    let dominant_is_real = if max_nonreal == f64::NEG_INFINITY {
        TriState::Yes
    } else {
        TriState::from_margin(
            max_nonreal < lambda,
            (max_nonreal - lambda).abs() > m * lambda,
        )
    };

    // Multiplicity of the root at lambda, exact.
    let simple = if is_squarefree(p) {
        TriState::Yes
    } else {
        let gcd = poly_gcd(p, &p.derivative());
        let just_below = BigRational::from_float(lambda * (1.0 - 1e-7))
            .expect("lambda is finite");
        if count_real_roots_above(&gcd, &just_below) > 0 {
            TriState::No
        } else {
            TriState::Yes
        }
    };

    // Open-annulus check: no root other than the exempted ones may have
    // modulus <= lambda^{-1}.
    let inv = 1.0 / lambda;
    let lambda_idx = nearest_root(&roots, Complex64::new(lambda, 0.0));
    let exempt_idx: Option<usize> = match mode {
        AnnulusMode::Nonorientable => None,
        AnnulusMode::Reversing => nearest_root(&roots, Complex64::new(-inv, 0.0)),
    };
    let mut annulus_ok = TriState::Yes;
    for (i, z) in roots.iter().enumerate() {
        if Some(i) == lambda_idx || Some(i) == exempt_idx {
            continue;
        }
        let modulus = z.norm();
        if modulus < inv * (1.0 - m) {
            annulus_ok = TriState::No;
            break;
        }
        if modulus <= inv * (1.0 + m) {
            annulus_ok = TriState::Ambiguous;
        }
    }

    RootProfile {
        perron_value: lambda,
        perron_converged: true,
        dominant_is_real,
        simple,
        annulus_ok,
        below_bound: below_bound_exact(p, r),
        roots,
        max_rel_residual,
    }
}

fn below_bound_exact(p: &IntPolynomial, r: &BigRational) -> TriState {
    // P(r) < 0 means r sits left of the largest real root. Otherwise count
    // roots above r exactly.
    if p.evaluate(r).is_negative() {
        return TriState::No;
    }
    if count_real_roots_above(p, r) == 0 {
        TriState::Yes
    } else {
        TriState::No
    }
}

fn nearest_root(roots: &[Complex64], target: Complex64) -> Option<usize> {
    roots
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| {
            (*a - target)
                .norm()
                .partial_cmp(&(*b - target).norm())
                .unwrap()
        })
        .map(|(i, _)| i)
}

/// Verdict of the Galois-conjugates-on-the-unit-circle diagnostic,
/// applied to the cyclotomic-stripped part of a candidate.
#[derive(Clone, Debug, PartialEq)]
pub enum UnitCircleDiagnostic {
    Clean,
    HasUnitModulusRoots(Vec<Complex64>),
}

const UNIT_CIRCLE_TOL: f64 = 1e-8;

pub fn unit_circle_diagnostic(p: &IntPolynomial) -> UnitCircleDiagnostic {
    if p.is_zero() || p.degree() == 0 {
        return UnitCircleDiagnostic::Clean;
    }
    let roots = match all_roots(p) {
        Ok(rs) => rs.roots,
        Err(e) => e.partial,
    };
    let on_circle: Vec<Complex64> = roots
        .into_iter()
        .filter(|z| (z.norm() - 1.0).abs() < UNIT_CIRCLE_TOL)
        .collect();
    if on_circle.is_empty() {
        UnitCircleDiagnostic::Clean
    } else {
        UnitCircleDiagnostic::HasUnitModulusRoots(on_circle)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_decimal_rational;

    fn poly(v: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(v)
    }

    #[test]
    fn newton_descent_examples() {
        let m = Margins::default();
        match newton_descent(&poly(&[-1, -1, -1, 1]), &m) {
            NewtonDescent::Converged(l) => assert!((l - 1.83929).abs() < 1e-4),
            other => panic!("expected convergence, got {other:?}"),
        }
        match newton_descent(&poly(&[-1, -1, 1]), &m) {
            NewtonDescent::Converged(l) => assert!((l - 1.61803).abs() < 1e-4),
            other => panic!("expected convergence, got {other:?}"),
        }
        // x^3 - 2x^2 + 2x + 1 has no positive real root.
        assert!(matches!(
            newton_descent(&poly(&[1, 2, -2, 1]), &m),
            NewtonDescent::Rejected(_)
        ));
    }

    #[test]
    fn all_roots_examples() {
        // x^2 + 1 -> {i, -i}
        let rs = all_roots(&poly(&[1, 0, 1])).unwrap();
        assert_eq!(rs.roots.len(), 2);
        assert!((rs.roots[0] - Complex64::new(0.0, -1.0)).norm() < 1e-10);
        assert!((rs.roots[1] - Complex64::new(0.0, 1.0)).norm() < 1e-10);

        // x^3 - x^2 - x - 1: real ~1.83929 plus a conjugate pair of
        // modulus ~ (1/1.83929)^{1/2}.
        let rs = all_roots(&poly(&[-1, -1, -1, 1])).unwrap();
        let real: Vec<_> = rs.roots.iter().filter(|z| z.im == 0.0).collect();
        assert_eq!(real.len(), 1);
        assert!((real[0].re - 1.8392867552141612).abs() < 1e-9);
        let pair: Vec<_> = rs.roots.iter().filter(|z| z.im != 0.0).collect();
        let expected_mod = (1.0f64 / 1.8392867552141612).sqrt();
        for z in pair {
            assert!((z.norm() - expected_mod).abs() < 1e-9);
        }

        // Product of root moduli of a monic +-1-constant polynomial is 1.
        let rs = all_roots(&poly(&[1, -1, -1, -1, 1])).unwrap();
        let prod: f64 = rs.roots.iter().map(|z| z.norm()).product();
        assert!((prod - 1.0).abs() < 1e-9);
    }

    #[test]
    fn profile_examples() {
        let m = Margins::default();
        // x^3 - 2x^2 - 1 at r = 46/25: largest root ~2.2 -> below_bound no.
        let p = poly(&[-1, 0, -2, 1]);
        let r = parse_decimal_rational("1.84").unwrap();
        let NewtonDescent::Converged(l) = newton_descent(&p, &m) else {
            panic!("descent should converge");
        };
        let prof = perron_profile(&p, l, &r, AnnulusMode::Nonorientable, &m);
        assert_eq!(prof.below_bound, TriState::No);

        // x^11 - x^6 - x^5 - 1 at r = 1.1743: all verdicts yes.
        let mut v = vec![0i64; 12];
        v[0] = -1;
        v[5] = -1;
        v[6] = -1;
        v[11] = 1;
        let p = poly(&v);
        let r = parse_decimal_rational("1.1743").unwrap();
        let NewtonDescent::Converged(l) = newton_descent(&p, &m) else {
            panic!("descent should converge");
        };
        assert!((l - 1.17429).abs() < 1e-4);
        let prof = perron_profile(&p, l, &r, AnnulusMode::Nonorientable, &m);
        assert_eq!(prof.dominant_is_real, TriState::Yes);
        assert_eq!(prof.simple, TriState::Yes);
        assert_eq!(prof.annulus_ok, TriState::Yes);
        assert_eq!(prof.below_bound, TriState::Yes);

        // (x^2-x-1)(x^2-1) at r = 1.62 in reversing mode: all yes.
        let p = poly(&[-1, -1, 1]).mul(&poly(&[-1, 0, 1]));
        let r = parse_decimal_rational("1.62").unwrap();
        let NewtonDescent::Converged(l) = newton_descent(&p, &m) else {
            panic!("descent should converge");
        };
        let prof = perron_profile(&p, l, &r, AnnulusMode::Reversing, &m);
        assert!(prof.all_pass(), "profile: {prof:?}");
        assert!(!prof.has_ambiguity());
    }

    #[test]
    fn unit_circle_examples() {
        // x^4 - x^3 - x^2 - x + 1 has conjugates on the unit circle.
        assert!(matches!(
            unit_circle_diagnostic(&poly(&[1, -1, -1, -1, 1])),
            UnitCircleDiagnostic::HasUnitModulusRoots(_)
        ));
        assert_eq!(
            unit_circle_diagnostic(&poly(&[-1, -1, -1, 1])),
            UnitCircleDiagnostic::Clean
        );
        // x^8 - x^5 - x^3 - 1 after stripping Phi_4 is clean.
        let mut v = vec![0i64; 9];
        v[0] = -1;
        v[3] = -1;
        v[5] = -1;
        v[8] = 1;
        let (stripped, factors) = crate::cyclotomic::strip_cyclotomic(&poly(&v));
        assert_eq!(factors, vec![4]);
        assert_eq!(
            unit_circle_diagnostic(&stripped),
            UnitCircleDiagnostic::Clean
        );
    }
}
