//! Depth-first enumeration over power-sum prefixes.
//!
//! At depth k the next power sum is constrained to one residue class
//! (mod k by integrality of c_k, mod 2k once the mod-2 palindromicity of
//! the final polynomial pins the parity of c_k), so the walk steps
//! through admissible values directly instead of filtering after the
//! fact.
//!
//! The hot lane works in checked i128; any overflow escalates the
//! affected subtree to an arbitrary-precision lane with identical logic.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::bounds::power_sum_range;
use crate::error::SearchError;
use crate::poly::IntPolynomial;
use crate::roots::{
    all_roots, newton_descent, perron_profile, AnnulusMode, Margins, NewtonDescent,
};
use crate::sturm::count_real_roots_above;

use super::{CandidateReport, FilterTrace, SearchConfig};

/// Identifier of the cascade step at which a polynomial was rejected,
/// numbered as in the elimination algorithm.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum StepId {
    /// Shape preconditions (degree, constant term, symmetry) violated.
    Shape,
    /// Step 5: power sums of the reciprocal polynomial out of bounds
    /// (nonorientable), or the skew-symmetric extension out of bounds
    /// (reversing).
    BackwardBounds,
    /// Step 6: Newton descent failed, or no real root above 1.
    Newton,
    /// Step 7: largest-modulus eigenvalue is not real.
    DominantReal,
    /// Step 8: leading eigenvalue is a multiple root.
    Simple,
    /// Step 9: a non-exempt root sits inside the closed inner disk.
    Annulus,
    /// Step 10: largest root is not below the bound.
    BelowBound,
    /// Stretch factors on nonorientable surfaces have degree at least 3.
    MinDegree,
}

impl fmt::Display for StepId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StepId::Shape => "shape preconditions",
            StepId::BackwardBounds => "step 5 (reverse bound check)",
            StepId::Newton => "step 6 (newton descent)",
            StepId::DominantReal => "step 7 (dominant root real)",
            StepId::Simple => "step 8 (dominant root simple)",
            StepId::Annulus => "step 9 (annulus check)",
            StepId::BelowBound => "step 10 (below bound)",
            StepId::MinDegree => "minimum degree rule",
        };
        write!(f, "{s}")
    }
}

/// Result of running the post-enumeration filters on one polynomial.
#[derive(Debug)]
pub enum FilterResult {
    Survived(Box<CandidateReport>),
    Rejected(StepId),
}

#[derive(Default, Clone)]
pub(crate) struct BlockAccumulator {
    pub trace: FilterTrace,
    pub candidates: Vec<CandidateReport>,
}

pub(crate) type BlockResult = BlockAccumulator;

/// Precomputed, immutable data for one run: admissible ranges per depth
/// and the filter parameters. Shared read-only across shard workers.
pub(crate) struct Ctx {
    d: usize,
    free: usize,
    reversing: bool,
    mod2_interleave: bool,
    /// Admissible [lo, hi] per k = 1..=d-1 with the mode's strictness.
    forward: Vec<Option<(i64, i64)>>,
    /// Non-strict ranges for the reciprocal-polynomial re-check.
    backward: Vec<Option<(i64, i64)>>,
    bound: BigRational,
    margins: Margins,
    /// Test hook: force the arbitrary-precision lane from the root.
    pub(crate) force_wide: bool,
}

impl Ctx {
    pub(crate) fn new(config: &SearchConfig) -> Result<Ctx, SearchError> {
        let d = config.mode.degree();
        if d < 2 {
            return Err(SearchError::InvalidConfig(format!(
                "degree {d} too small to search"
            )));
        }
        let strict = config.mode.strict_lower();
        let mk = |strict_lower: bool| -> Result<Vec<Option<(i64, i64)>>, SearchError> {
            (1..d)
                .map(|k| {
                    power_sum_range(d, k as u32, &config.bound, strict_lower)
                        .map(|r| r.admissible)
                        .map_err(|e| SearchError::InvalidConfig(e.to_string()))
                })
                .collect()
        };
        Ok(Ctx {
            d,
            free: config.mode.free_depth(),
            reversing: config.mode.is_reversing(),
            mod2_interleave: config.mod2_interleave && !config.mode.is_reversing(),
            forward: mk(strict)?,
            backward: mk(false)?,
            bound: config.bound.clone(),
            margins: config.margins,
            force_wide: false,
        })
    }

    fn annulus_mode(&self) -> AnnulusMode {
        if self.reversing {
            AnnulusMode::Reversing
        } else {
            AnnulusMode::Nonorientable
        }
    }

    pub(crate) fn prefix_space(&self) -> u128 {
        let mut acc: u128 = 1;
        for k in 1..=self.free {
            let len = match self.forward[k - 1] {
                Some((lo, hi)) => (hi - lo + 1) as u128,
                None => 0,
            };
            acc = acc.saturating_mul(len);
        }
        acc
    }

    /// Iteration parameters for depth k given the dot product
    /// `s_k = sum c_i p_{k-i}`: start value, inclusive end, and step.
    fn level_params_small(&self, k: usize, s_k: i128, c: &[i128]) -> Option<(i128, i128, i128)> {
        let (lo, hi) = self.forward[k - 1]?;
        let kk = k as i128;
        let mut modulus = kk;
        let mut residue = s_k.rem_euclid(kk);
        if self.mod2_interleave && 2 * k > self.d && k < self.d {
            let t = c[self.d - k - 1].rem_euclid(2);
            modulus = 2 * kk;
            residue = (s_k.rem_euclid(modulus) + kk * t).rem_euclid(modulus);
        }
        let lo = lo as i128;
        let start = lo + (residue - lo).rem_euclid(modulus);
        (start <= hi as i128).then_some((start, hi as i128, modulus))
    }

    fn level_params_big(&self, k: usize, s_k: &BigInt, c: &[BigInt]) -> Option<(i64, i64, i64)> {
        let (lo, hi) = self.forward[k - 1]?;
        let kk = BigInt::from(k);
        let mut modulus = kk.clone();
        let mut residue = s_k.mod_floor(&kk);
        if self.mod2_interleave && 2 * k > self.d && k < self.d {
            let t = c[self.d - k - 1].mod_floor(&BigInt::from(2));
            modulus = 2 * kk.clone();
            residue = (s_k + kk * t).mod_floor(&modulus);
        }
        let lo_b = BigInt::from(lo);
        let start = &lo_b + (&residue - &lo_b).mod_floor(&modulus);
        let start = start.to_i64().expect("level start fits i64");
        let modulus = modulus.to_i64().expect("level step fits i64");
        (start <= hi).then_some((start, hi, modulus))
    }

    /// Top-level prefix blocks: the admissible values of (p_1, p_2) (or
    /// just p_1 when only one power sum is free), in ascending order.
    pub(crate) fn enumerate_blocks(&self) -> Vec<Vec<i64>> {
        let mut blocks = Vec::new();
        let Some((start1, hi1, step1)) = self.level_params_small(1, 0, &[]) else {
            return blocks;
        };
        let mut p1 = start1;
        while p1 <= hi1 {
            let c1 = p1; // (p_1 - 0) / 1
            if self.free < 2 {
                blocks.push(vec![p1 as i64]);
            } else if let Some((start2, hi2, step2)) =
                self.level_params_small(2, c1 * p1, &[c1])
            {
                let mut p2 = start2;
                while p2 <= hi2 {
                    blocks.push(vec![p1 as i64, p2 as i64]);
                    p2 += step2;
                }
            }
            p1 += step1;
        }
        blocks
    }

    /// Runs the DFS below one prefix block.
    pub(crate) fn run_block(&self, prefix: &[i64]) -> BlockResult {
        let mut acc = BlockAccumulator::default();
        let mut p: Vec<i128> = Vec::with_capacity(self.free);
        let mut c: Vec<i128> = Vec::with_capacity(self.free);
        for (idx, &pv) in prefix.iter().enumerate() {
            let k = idx + 1;
            let s_k: i128 = (1..k).map(|i| c[i - 1] * p[k - i - 1] as i128).sum();
            let num = pv as i128 - s_k;
            debug_assert_eq!(num.rem_euclid(k as i128), 0);
            p.push(pv as i128);
            c.push(num / k as i128);
        }
        if self.force_wide {
            let mut pb = p.clone();
            let mut cb: Vec<BigInt> = c.iter().map(|&x| BigInt::from(x)).collect();
            self.dfs_big(prefix.len() + 1, &mut pb, &mut cb, &mut acc);
        } else {
            self.dfs_small(prefix.len() + 1, &mut p, &mut c, &mut acc);
        }
        acc
    }

    /// Rebuilds a block result from checkpointed counters and candidate
    /// encodings.
    pub(crate) fn replay_block(
        &self,
        rec: &super::checkpoint::BlockRecord,
    ) -> Result<BlockResult, SearchError> {
        let mut acc = BlockAccumulator {
            trace: rec.step_counters,
            candidates: Vec::new(),
        };
        for text in &rec.candidates {
            let poly: IntPolynomial =
                text.parse().map_err(|_| SearchError::CorruptCheckpoint {
                    line: 0,
                    reason: format!("unparseable candidate `{text}`"),
                })?;
            match filter_polynomial(&poly, self) {
                FilterResult::Survived(report) => acc.candidates.push(*report),
                FilterResult::Rejected(step) => {
                    return Err(SearchError::CorruptCheckpoint {
                        line: 0,
                        reason: format!(
                            "checkpointed candidate {poly} no longer survives ({step})"
                        ),
                    })
                }
            }
        }
        Ok(acc)
    }

    // ---- fast lane -------------------------------------------------

    fn dfs_small(&self, k: usize, p: &mut Vec<i128>, c: &mut Vec<i128>, acc: &mut BlockAccumulator) {
        if k > self.free {
            self.leaf_small(p, c, acc);
            return;
        }
        let mut s_k: i128 = 0;
        for i in 1..k {
            match c[i - 1]
                .checked_mul(p[k - i - 1])
                .and_then(|t| s_k.checked_add(t))
            {
                Some(v) => s_k = v,
                None => {
                    self.escalate(k, p, c, acc);
                    return;
                }
            }
        }
        let Some((start, hi, step)) = self.level_params_small(k, s_k, c) else {
            return;
        };
        let kk = k as i128;
        let mut pk = start;
        while pk <= hi {
            let ck = (pk - s_k) / kk;
            p.push(pk);
            c.push(ck);
            self.dfs_small(k + 1, p, c, acc);
            p.pop();
            c.pop();
            pk += step;
        }
    }

    #[cold]
    fn escalate(&self, k: usize, p: &[i128], c: &[i128], acc: &mut BlockAccumulator) {
        let mut pb: Vec<i128> = p.to_vec();
        let mut cb: Vec<BigInt> = c.iter().map(|&x| BigInt::from(x)).collect();
        self.dfs_big(k, &mut pb, &mut cb, acc);
    }

    fn leaf_small(&self, p: &[i128], c: &[i128], acc: &mut BlockAccumulator) {
        if self.reversing {
            self.leaf_small_reversing(p, c, acc);
            return;
        }
        acc.trace.integral += 1;
        if !self.mod2_interleave {
            let d = self.d;
            for k in (d / 2 + 1)..d {
                if (c[k - 1] - c[d - k - 1]).rem_euclid(2) != 0 {
                    return;
                }
            }
        }
        acc.trace.mod2 += 1;
        for cd in [1i128, -1] {
            acc.trace.const_branch += 1;
            match self.backward_check_small(c, cd) {
                Some(true) => {
                    acc.trace.backward_ok += 1;
                    let poly = poly_from_newton_small(c, cd, self.d);
                    self.run_filters(poly, acc);
                }
                Some(false) => {}
                None => {
                    // Overflow in the reverse power sums: redo exactly.
                    let cb: Vec<BigInt> = c.iter().map(|&x| BigInt::from(x)).collect();
                    if self.backward_check_big(&cb, cd) {
                        acc.trace.backward_ok += 1;
                        let poly = poly_from_newton_small(c, cd, self.d);
                        self.run_filters(poly, acc);
                    }
                }
            }
        }
    }

    /// Reverse power sums `p*_k` of `± x^d P(1/x)` from the reversed,
    /// sign-adjusted coefficient sequence, checked against the non-strict
    /// bounds after every step. Returns None on i128 overflow.
    fn backward_check_small(&self, c: &[i128], cd: i128) -> Option<bool> {
        let d = self.d;
        let sigma: i128 = if cd == 1 { -1 } else { 1 };
        let mut pstar: Vec<i128> = Vec::with_capacity(d - 1);
        for k in 1..d {
            let cstar_k = sigma.checked_mul(c[d - k - 1])?;
            let mut v = (k as i128).checked_mul(cstar_k)?;
            for i in 1..k {
                let cstar_i = sigma.checked_mul(c[d - i - 1])?;
                v = v.checked_add(cstar_i.checked_mul(pstar[k - i - 1])?)?;
            }
            match self.backward[k - 1] {
                Some((lo, hi)) if v >= lo as i128 && v <= hi as i128 => pstar.push(v),
                _ => return Some(false),
            }
        }
        Some(true)
    }

    fn leaf_small_reversing(&self, p: &[i128], c: &[i128], acc: &mut BlockAccumulator) {
        acc.trace.integral += 1;
        acc.trace.mod2 += 1;
        acc.trace.const_branch += 1;
        let g = self.free;
        let d = self.d;
        // Fill c_{g+1}..c_{d-1} by skew-reciprocity and re-derive the
        // tail power sums, aborting on the first bound violation.
        let mut full_c: Vec<i128> = c.to_vec();
        let mut full_p: Vec<i128> = p.to_vec();
        for j in g + 1..d {
            let sign: i128 = if (g + j) % 2 == 0 { 1 } else { -1 };
            let Some(cj) = sign.checked_mul(full_c[d - j - 1]) else {
                return self.leaf_big_reversing_from(p, c, acc);
            };
            full_c.push(cj);
            let mut pk = match (j as i128).checked_mul(cj) {
                Some(v) => v,
                None => return self.leaf_big_reversing_from(p, c, acc),
            };
            for i in 1..j {
                match full_c[i - 1]
                    .checked_mul(full_p[j - i - 1])
                    .and_then(|t| pk.checked_add(t))
                {
                    Some(v) => pk = v,
                    None => return self.leaf_big_reversing_from(p, c, acc),
                }
            }
            match self.forward[j - 1] {
                Some((lo, hi)) if pk >= lo as i128 && pk <= hi as i128 => full_p.push(pk),
                _ => return,
            }
        }
        acc.trace.backward_ok += 1;
        let cd: i128 = if g % 2 == 0 { -1 } else { 1 };
        let poly = poly_from_newton_small(&full_c, cd, d);
        self.run_filters(poly, acc);
    }

    #[cold]
    fn leaf_big_reversing_from(&self, p: &[i128], c: &[i128], acc: &mut BlockAccumulator) {
        // Counters for this leaf were already bumped; undo the arrival
        // counts so the big-lane leaf can redo them consistently.
        acc.trace.integral -= 1;
        acc.trace.mod2 -= 1;
        acc.trace.const_branch -= 1;
        let pb: Vec<i128> = p.to_vec();
        let cb: Vec<BigInt> = c.iter().map(|&x| BigInt::from(x)).collect();
        self.leaf_big(&pb, &cb, acc);
    }

    // ---- arbitrary-precision lane -----------------------------------

    fn dfs_big(&self, k: usize, p: &mut Vec<i128>, c: &mut Vec<BigInt>, acc: &mut BlockAccumulator) {
        if k > self.free {
            self.leaf_big(p, c, acc);
            return;
        }
        let mut s_k = BigInt::zero();
        for i in 1..k {
            s_k += &c[i - 1] * BigInt::from(p[k - i - 1]);
        }
        let Some((start, hi, step)) = self.level_params_big(k, &s_k, c) else {
            return;
        };
        let kk = BigInt::from(k);
        let mut pk = start;
        while pk <= hi {
            let ck = (BigInt::from(pk) - &s_k) / &kk;
            p.push(pk as i128);
            c.push(ck);
            self.dfs_big(k + 1, p, c, acc);
            p.pop();
            c.pop();
            pk += step;
        }
    }

    fn leaf_big(&self, p: &[i128], c: &[BigInt], acc: &mut BlockAccumulator) {
        if self.reversing {
            self.leaf_big_reversing(p, c, acc);
            return;
        }
        acc.trace.integral += 1;
        if !self.mod2_interleave {
            let d = self.d;
            for k in (d / 2 + 1)..d {
                if (&c[k - 1] - &c[d - k - 1]).mod_floor(&BigInt::from(2)) != BigInt::zero() {
                    return;
                }
            }
        }
        acc.trace.mod2 += 1;
        for cd in [1i64, -1] {
            acc.trace.const_branch += 1;
            if self.backward_check_big(c, cd as i128) {
                acc.trace.backward_ok += 1;
                let poly = poly_from_newton_big(c, cd, self.d);
                self.run_filters(poly, acc);
            }
        }
    }

    fn backward_check_big(&self, c: &[BigInt], cd: i128) -> bool {
        let d = self.d;
        let sigma = BigInt::from(if cd == 1 { -1 } else { 1 });
        let mut pstar: Vec<BigInt> = Vec::with_capacity(d - 1);
        for k in 1..d {
            let mut v = BigInt::from(k) * (&sigma * &c[d - k - 1]);
            for i in 1..k {
                v += (&sigma * &c[d - i - 1]) * &pstar[k - i - 1];
            }
            let ok = match self.backward[k - 1] {
                Some((lo, hi)) => v >= BigInt::from(lo) && v <= BigInt::from(hi),
                None => false,
            };
            if !ok {
                return false;
            }
            pstar.push(v);
        }
        true
    }

    fn leaf_big_reversing(&self, p: &[i128], c: &[BigInt], acc: &mut BlockAccumulator) {
        acc.trace.integral += 1;
        acc.trace.mod2 += 1;
        acc.trace.const_branch += 1;
        let g = self.free;
        let d = self.d;
        let mut full_c: Vec<BigInt> = c.to_vec();
        let mut full_p: Vec<BigInt> = p.iter().map(|&x| BigInt::from(x)).collect();
        for j in g + 1..d {
            let sign = if (g + j) % 2 == 0 { 1 } else { -1 };
            let cj = BigInt::from(sign) * &full_c[d - j - 1];
            full_c.push(cj.clone());
            let mut pk = BigInt::from(j) * &cj;
            for i in 1..j {
                pk += &full_c[i - 1] * &full_p[j - i - 1];
            }
            let ok = match self.forward[j - 1] {
                Some((lo, hi)) => pk >= BigInt::from(lo) && pk <= BigInt::from(hi),
                None => false,
            };
            if !ok {
                return;
            }
            full_p.push(pk);
        }
        acc.trace.backward_ok += 1;
        let cd: i64 = if g % 2 == 0 { -1 } else { 1 };
        let poly = poly_from_newton_big(&full_c, cd, d);
        self.run_filters(poly, acc);
    }

    // ---- exact / numeric filter stage --------------------------------

    fn run_filters(&self, poly: IntPolynomial, acc: &mut BlockAccumulator) {
        let result = self.cascade(poly);
        let reached = match &result {
            FilterResult::Survived(_) => StepId::MinDegree as u8 + 1,
            FilterResult::Rejected(step) => *step as u8,
        };
        if reached > StepId::Newton as u8 {
            acc.trace.newton_ok += 1;
        }
        if reached > StepId::DominantReal as u8 {
            acc.trace.dominant_real += 1;
        }
        if reached > StepId::Simple as u8 {
            acc.trace.simple += 1;
        }
        if reached > StepId::Annulus as u8 {
            acc.trace.annulus += 1;
        }
        if reached > StepId::BelowBound as u8 {
            acc.trace.below_bound += 1;
        }
        if let FilterResult::Survived(report) = result {
            acc.trace.survivors += 1;
            acc.candidates.push(*report);
        }
    }

    /// Steps 6-10 plus the minimum-degree rule, in order.
    fn cascade(&self, poly: IntPolynomial) -> FilterResult {
        let descent = newton_descent(&poly, &self.margins);
        let lambda_opt = match descent {
            NewtonDescent::Rejected(_) => return FilterResult::Rejected(StepId::Newton),
            NewtonDescent::Converged(l) => Some(l),
            NewtonDescent::Ambiguous => None,
        };
        // The descent limit must be a root strictly above 1. Multiple
        // roots at 1 stall the float iteration as far as ~1e-2 above the
        // root, so this is resolved exactly, not by a threshold.
        if count_real_roots_above(&poly, &BigRational::one()) == 0 {
            return FilterResult::Rejected(StepId::Newton);
        }
        let (lambda, converged) = match lambda_opt {
            Some(l) => (l, true),
            None => match fallback_lambda(&poly) {
                Some(l) => (l, false),
                None => return FilterResult::Rejected(StepId::Newton),
            },
        };
        let mut profile =
            perron_profile(&poly, lambda, &self.bound, self.annulus_mode(), &self.margins);
        profile.perron_converged &= converged;
        if profile.dominant_is_real.is_no() {
            return FilterResult::Rejected(StepId::DominantReal);
        }
        if profile.simple.is_no() {
            return FilterResult::Rejected(StepId::Simple);
        }
        if profile.annulus_ok.is_no() {
            return FilterResult::Rejected(StepId::Annulus);
        }
        if profile.below_bound.is_no() {
            return FilterResult::Rejected(StepId::BelowBound);
        }
        if !self.reversing {
            let (reduced, _) = poly.strip_unit_roots();
            if reduced.is_zero() || reduced.degree() < 3 {
                return FilterResult::Rejected(StepId::MinDegree);
            }
        }
        FilterResult::Survived(Box::new(CandidateReport::build(poly, profile)))
    }
}

/// Largest real root above 1, numerically; used only when the descent
/// hit its iteration cap (conservative retention path).
fn fallback_lambda(poly: &IntPolynomial) -> Option<f64> {
    let roots = match all_roots(poly) {
        Ok(rs) => rs.roots,
        Err(e) => e.partial,
    };
    roots
        .iter()
        .filter(|z| z.im == 0.0 && z.re > 1.0)
        .map(|z| z.re)
        .fold(None, |m, v| Some(m.map_or(v, |m: f64| m.max(v))))
}

fn poly_from_newton_small(c: &[i128], cd: i128, d: usize) -> IntPolynomial {
    let mut coeffs = vec![BigInt::zero(); d + 1];
    coeffs[d] = BigInt::one();
    coeffs[0] = BigInt::from(-cd);
    for (i, &ci) in c.iter().enumerate().take(d - 1) {
        coeffs[d - (i + 1)] = BigInt::from(-ci);
    }
    IntPolynomial::from_coeffs(coeffs)
}

fn poly_from_newton_big(c: &[BigInt], cd: i64, d: usize) -> IntPolynomial {
    let mut coeffs = vec![BigInt::zero(); d + 1];
    coeffs[d] = BigInt::one();
    coeffs[0] = BigInt::from(-cd);
    for (i, ci) in c.iter().enumerate().take(d - 1) {
        coeffs[d - (i + 1)] = -ci;
    }
    IntPolynomial::from_coeffs(coeffs)
}

/// Post-enumeration filters for a single polynomial: shape checks, the
/// step-5 bound re-check, then the root cascade.
pub(crate) fn filter_polynomial(p: &IntPolynomial, ctx: &Ctx) -> FilterResult {
    if p.is_zero() || !p.is_monic() || p.degree() != ctx.d {
        return FilterResult::Rejected(StepId::Shape);
    }
    let d = ctx.d;
    let a0 = p.constant_term();
    if ctx.reversing {
        let g = ctx.free;
        let want = if g % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        if a0 != want {
            return FilterResult::Rejected(StepId::Shape);
        }
        // Exact skew-reciprocity: a_i = (-1)^{g+i} a_{d-i}.
        for i in 0..=d {
            let mut rhs = p.coeff(d - i);
            if (g + i) % 2 == 1 {
                rhs = -rhs;
            }
            if p.coeff(i) != rhs {
                return FilterResult::Rejected(StepId::Shape);
            }
        }
        // The tail power sums must satisfy the bounds.
        let c = crate::poly::newton_coefficients(p).expect("monic checked above");
        let ps = crate::poly::power_sums_from_newton(&c, d - 1);
        for (k, pk) in ps.iter().enumerate() {
            let ok = match ctx.forward[k] {
                Some((lo, hi)) => *pk >= BigInt::from(lo) && *pk <= BigInt::from(hi),
                None => false,
            };
            if !ok {
                return FilterResult::Rejected(StepId::BackwardBounds);
            }
        }
    } else {
        if !a0.clone().abs().is_one() {
            return FilterResult::Rejected(StepId::Shape);
        }
        let c = crate::poly::newton_coefficients(p).expect("monic checked above");
        let cd = if a0 == BigInt::one() { -1i128 } else { 1i128 };
        if !ctx.backward_check_big(&c[..d - 1], cd) {
            return FilterResult::Rejected(StepId::BackwardBounds);
        }
    }
    ctx.cascade(p.clone())
}
