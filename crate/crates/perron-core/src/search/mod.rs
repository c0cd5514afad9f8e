//! The polynomial elimination pipeline: a depth-first enumeration of
//! power-sum prefixes with interleaved exact pruning, followed by the
//! root-based filter cascade. Shardable, checkpointable, deterministic.

mod checkpoint;
mod dfs;

use std::fmt;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::strip_cyclotomic;
use crate::error::SearchError;
use crate::poly::{IntPolynomial, UnitRootMultiplicities};
use crate::roots::{Margins, RootProfile, UnitCircleDiagnostic};

use dfs::filter_polynomial;
pub use dfs::{FilterResult, StepId};

/// Search variant plus genus; fixes the polynomial degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    /// Pseudo-Anosov maps with an orientable invariant foliation on the
    /// closed nonorientable surface N_g; characteristic polynomials have
    /// degree g - 1.
    Nonorientable { genus: u32 },
    /// Orientation-reversing maps on the closed orientable surface S_g;
    /// degree 2g.
    Reversing { genus: u32 },
}

impl SearchMode {
    pub fn nonorientable(genus: u32) -> Result<Self, SearchError> {
        if genus < 4 {
            return Err(SearchError::InvalidConfig(format!(
                "nonorientable search requires genus >= 4, got {genus}"
            )));
        }
        Ok(SearchMode::Nonorientable { genus })
    }

    pub fn reversing(genus: u32) -> Result<Self, SearchError> {
        if genus < 1 {
            return Err(SearchError::InvalidConfig(
                "reversing search requires genus >= 1".into(),
            ));
        }
        Ok(SearchMode::Reversing { genus })
    }

    pub fn genus(&self) -> u32 {
        match self {
            SearchMode::Nonorientable { genus } | SearchMode::Reversing { genus } => *genus,
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            SearchMode::Nonorientable { genus } => (*genus as usize) - 1,
            SearchMode::Reversing { genus } => 2 * (*genus as usize),
        }
    }

    /// Number of freely chosen power sums: all of p_1..p_{d-1} in the
    /// nonorientable case, only p_1..p_g in the reversing case (the rest
    /// follow from skew-reciprocity).
    pub fn free_depth(&self) -> usize {
        match self {
            SearchMode::Nonorientable { .. } => self.degree() - 1,
            SearchMode::Reversing { genus } => *genus as usize,
        }
    }

    /// Strictness of the lower power-sum bound: strict when no root can
    /// attain modulus exactly lambda^{-1}.
    pub fn strict_lower(&self) -> bool {
        matches!(self, SearchMode::Nonorientable { .. })
    }

    pub fn is_reversing(&self) -> bool {
        matches!(self, SearchMode::Reversing { .. })
    }
}

/// Full configuration of one elimination run.
#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub mode: SearchMode,
    /// Exact upper bound r on the stretch factor; pruning is computed in
    /// exact rationals derived from this value.
    pub bound: BigRational,
    pub shards: usize,
    /// When set, only this shard's blocks are run (cluster usage); merge
    /// happens later through the checkpoint.
    pub shard_index: Option<usize>,
    pub checkpoint: Option<PathBuf>,
    pub margins: Margins,
    /// Prune on partial mod-2 palindromicity as soon as more than half of
    /// the coefficients are fixed (nonorientable only). Disabling it
    /// reproduces the plain batch semantics of the published step counts;
    /// the final candidate sets are identical either way.
    pub mod2_interleave: bool,
}

impl SearchConfig {
    pub fn new(mode: SearchMode, bound: BigRational) -> Result<Self, SearchError> {
        if bound <= BigRational::one() {
            return Err(SearchError::InvalidConfig(format!(
                "bound must be > 1, got {bound}"
            )));
        }
        Ok(SearchConfig {
            mode,
            bound,
            shards: 1,
            shard_index: None,
            checkpoint: None,
            margins: Margins::default(),
            mod2_interleave: true,
        })
    }

    pub fn with_shards(mut self, shards: usize) -> Self {
        self.shards = shards.max(1);
        self
    }

    pub fn with_checkpoint(mut self, path: PathBuf) -> Self {
        self.checkpoint = Some(path);
        self
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        if self.bound <= BigRational::one() {
            return Err(SearchError::InvalidConfig("bound must be > 1".into()));
        }
        if self.shards == 0 {
            return Err(SearchError::InvalidConfig("shards must be >= 1".into()));
        }
        if let Some(i) = self.shard_index {
            if i >= self.shards {
                return Err(SearchError::InvalidConfig(format!(
                    "shard index {i} out of range for {} shards",
                    self.shards
                )));
            }
        }
        Ok(())
    }

    /// Stable fingerprint of everything that determines the block
    /// partition; checkpoints refuse to resume across a mismatch.
    pub fn fingerprint(&self) -> String {
        let mode = match self.mode {
            SearchMode::Nonorientable { genus } => format!("nonorientable:{genus}"),
            SearchMode::Reversing { genus } => format!("reversing:{genus}"),
        };
        format!(
            "{mode};r={}/{};shards={};mod2_interleave={}",
            self.bound.numer(),
            self.bound.denom(),
            self.shards,
            self.mod2_interleave
        )
    }
}

/// Per-step candidate counters along the cascade. Counters are
/// non-increasing except the constant-coefficient branch, which at most
/// doubles.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterTrace {
    /// Product of the admissible range sizes (step 1).
    pub prefix_space: u128,
    /// Prefixes with all Newton coefficients integral (step 2). Under
    /// interleaved mod-2 pruning this counts only the prefixes that also
    /// satisfied the partial palindromicity checks, i.e. it equals the
    /// step-3 counter.
    pub integral: u64,
    /// ... and reciprocal mod 2 (step 3).
    pub mod2: u64,
    /// Constant-coefficient branches tried (step 4).
    pub const_branch: u64,
    /// Survivors of the reciprocal-polynomial bound re-check (step 5); in
    /// reversing mode, of the skew-symmetric extension bound check.
    pub backward_ok: u64,
    /// Newton descent converged to a root above 1 (step 6).
    pub newton_ok: u64,
    /// Largest-modulus eigenvalue not ruled non-real (step 7).
    pub dominant_real: u64,
    /// Leading eigenvalue not ruled multiple (step 8).
    pub simple: u64,
    /// No extra root inside the closed inner disk (step 9).
    pub annulus: u64,
    /// Largest root below the bound r (step 10).
    pub below_bound: u64,
    /// Final candidates after the minimum-degree rule (nonorientable).
    pub survivors: u64,
    /// Whether the mod-2 checks were interleaved into the DFS.
    pub mod2_interleaved: bool,
}

impl FilterTrace {
    pub fn absorb(&mut self, other: &FilterTrace) {
        self.integral += other.integral;
        self.mod2 += other.mod2;
        self.const_branch += other.const_branch;
        self.backward_ok += other.backward_ok;
        self.newton_ok += other.newton_ok;
        self.dominant_real += other.dominant_real;
        self.simple += other.simple;
        self.annulus += other.annulus;
        self.below_bound += other.below_bound;
        self.survivors += other.survivors;
    }
}

impl fmt::Display for FilterTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "step  1 (power-sum prefix space) {}", self.prefix_space)?;
        if self.mod2_interleaved {
            writeln!(
                f,
                "step  2 (integral coefficients)  {} (interleaved with step 3)",
                self.integral
            )?;
        } else {
            writeln!(f, "step  2 (integral coefficients)  {}", self.integral)?;
        }
        writeln!(f, "step  3 (reciprocal mod 2)       {}", self.mod2)?;
        writeln!(f, "step  4 (constant term branch)   {}", self.const_branch)?;
        writeln!(f, "step  5 (reverse bound check)    {}", self.backward_ok)?;
        writeln!(f, "step  6 (newton descent)         {}", self.newton_ok)?;
        writeln!(f, "step  7 (dominant root real)     {}", self.dominant_real)?;
        writeln!(f, "step  8 (dominant root simple)   {}", self.simple)?;
        writeln!(f, "step  9 (annulus check)          {}", self.annulus)?;
        writeln!(f, "step 10 (below bound)            {}", self.below_bound)?;
        write!(f, "final survivors                  {}", self.survivors)
    }
}

/// A polynomial that survived the cascade, with its root data and the
/// reduced part that actually carries the stretch factor.
#[derive(Clone, Debug)]
pub struct CandidateReport {
    pub polynomial: IntPolynomial,
    pub perron_value: f64,
    pub profile: RootProfile,
    /// After dividing out unit roots and cyclotomic factors.
    pub stripped: IntPolynomial,
    pub unit_roots_removed: UnitRootMultiplicities,
    pub cyclotomic_factors: Vec<usize>,
    pub unit_circle: UnitCircleDiagnostic,
    /// True when any filter verdict was ambiguous; such candidates are
    /// retained for manual review rather than discarded.
    pub ambiguous: bool,
}

impl CandidateReport {
    pub(crate) fn build(polynomial: IntPolynomial, profile: RootProfile) -> CandidateReport {
        let (without_units, unit_roots_removed) = polynomial.strip_unit_roots();
        let (stripped, cyclotomic_factors) = strip_cyclotomic(&without_units);
        let unit_circle = crate::roots::unit_circle_diagnostic(&stripped);
        let ambiguous = profile.has_ambiguity();
        CandidateReport {
            perron_value: profile.perron_value,
            polynomial,
            profile,
            stripped,
            unit_roots_removed,
            cyclotomic_factors,
            unit_circle,
            ambiguous,
        }
    }
}

/// Merged result of a run: survivors in canonical order plus the summed
/// counters.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub candidates: Vec<CandidateReport>,
    pub trace: FilterTrace,
    /// Prefix blocks completed (including ones loaded from a checkpoint).
    pub blocks_done: usize,
    pub blocks_total: usize,
}

/// Runs the full nonorientable elimination for the configured genus.
pub fn enumerate_nonorientable(config: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    if config.mode.is_reversing() {
        return Err(SearchError::InvalidConfig(
            "enumerate_nonorientable called with a reversing mode".into(),
        ));
    }
    run_sharded(config)
}

/// Runs the orientation-reversing elimination for the configured genus.
pub fn enumerate_reversing(config: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    if !config.mode.is_reversing() {
        return Err(SearchError::InvalidConfig(
            "enumerate_reversing called with a nonorientable mode".into(),
        ));
    }
    run_sharded(config)
}

fn effective_threads(shards: usize) -> usize {
    let hw = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);
    let cap = std::env::var("PERRON_SIEVE_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or(hw);
    cap.min(hw).min(shards).max(1)
}

/// Partitions the DFS into top-level prefix blocks, assigns them to
/// shards round-robin, runs the shards (resuming from the checkpoint when
/// one is given), and merges deterministically: candidates sorted by
/// canonical polynomial encoding, counters summed.
pub fn run_sharded(config: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    config.validate()?;
    let ctx = dfs::Ctx::new(config)?;
    let blocks = ctx.enumerate_blocks();
    let blocks_total = blocks.len();

    // (block index, prefix) for every block this invocation must run.
    let mine: Vec<(usize, Vec<i64>)> = blocks
        .iter()
        .enumerate()
        .filter(|(i, _)| match config.shard_index {
            Some(s) => i % config.shards == s,
            None => true,
        })
        .map(|(i, b)| (i, b.clone()))
        .collect();

    let mut checkpoint = match &config.checkpoint {
        Some(path) => Some(checkpoint::Checkpoint::open(path, config)?),
        None => None,
    };

    let mut done: Vec<(Vec<i64>, dfs::BlockResult)> = Vec::new();
    let mut pending: Vec<(usize, Vec<i64>)> = Vec::new();
    for (i, prefix) in mine {
        match checkpoint
            .as_ref()
            .and_then(|c| c.completed(&prefix))
        {
            Some(rec) => done.push((prefix, ctx.replay_block(rec)?)),
            None => pending.push((i, prefix)),
        }
    }

    let writer = match checkpoint.as_mut() {
        Some(c) => Some(Mutex::new(c.writer()?)),
        None => None,
    };
    let results: Mutex<Vec<(usize, Vec<i64>, dfs::BlockResult)>> = Mutex::new(Vec::new());
    let next = AtomicUsize::new(0);
    let threads = effective_threads(config.shards);

    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let idx = next.fetch_add(1, Ordering::Relaxed);
                if idx >= pending.len() {
                    break;
                }
                let (block_idx, prefix) = &pending[idx];
                let result = ctx.run_block(prefix);
                if let Some(w) = &writer {
                    let record = checkpoint::block_record(
                        block_idx % config.shards,
                        prefix,
                        &result,
                    );
                    let mut guard = w.lock().expect("checkpoint writer poisoned");
                    checkpoint::append_record(&mut guard, &record);
                }
                results
                    .lock()
                    .expect("result collector poisoned")
                    .push((*block_idx, prefix.clone(), result));
            });
        }
    });

    let blocks_run = results.into_inner().expect("result collector poisoned");
    let mut all: Vec<(Vec<i64>, dfs::BlockResult)> = done;
    all.extend(blocks_run.into_iter().map(|(_, p, r)| (p, r)));

    let mut trace = FilterTrace {
        prefix_space: ctx.prefix_space(),
        mod2_interleaved: config.mod2_interleave && !config.mode.is_reversing(),
        ..FilterTrace::default()
    };
    let mut candidates: Vec<CandidateReport> = Vec::new();
    let blocks_done = all.len();
    for (_, block) in &all {
        trace.absorb(&block.trace);
        candidates.extend(block.candidates.iter().cloned());
    }
    candidates.sort_by(|a, b| {
        (a.polynomial.degree(), a.polynomial.coeffs())
            .cmp(&(b.polynomial.degree(), b.polynomial.coeffs()))
    });

    if let Some(mut cp) = checkpoint {
        if config.shard_index.is_none() && blocks_done == blocks_total {
            cp.seal(&trace)?;
        }
    }

    Ok(SearchOutcome {
        candidates,
        trace,
        blocks_done,
        blocks_total,
    })
}

/// Re-runs the post-enumeration filter cascade (steps 5-10 plus the
/// minimum-degree rule) on a single polynomial.
pub fn filter_pipeline(p: &IntPolynomial, config: &SearchConfig) -> Result<FilterResult, SearchError> {
    config.validate()?;
    let ctx = dfs::Ctx::new(config)?;
    Ok(filter_polynomial(p, &ctx))
}
