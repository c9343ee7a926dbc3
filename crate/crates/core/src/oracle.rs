//! Independent checks of the closed-form bound.
//!
//! * [`exhaustive_max_comparisons`] runs the construction on every
//!   permutation of `1..=n` for small `n`.
//! * [`random_bound_check`] samples seeded uniform permutations.
//! * [`verify_range`] sweeps `lo..=hi` and records per-`n` agreement between
//!   the formula, the generated witness, the direct height sum, the edge
//!   cover and, when enabled, the exhaustive maximum.
//!
//! Sampling uses `ChaCha8Rng::seed_from_u64(seed)` on stream `n`, and each
//! sample is `1..=n` shuffled with `rand`'s Fisher-Yates `SliceRandom::shuffle`.
//! The sequence is therefore fixed by `(seed, n)` on every platform.

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::adversary::worst_case;
use crate::error::{Error, Result};
use crate::heap::{buildheap, buildheap_slice, is_heap, HeapArray};
use crate::numeric::{binary_profile, height_sum_formula, worst_case_bound};
use crate::treegeom::{edge_cover_check, height_sum_direct};

pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 9;
/// Hard ceiling for exhaustive search; 11! is about 4e7 constructions.
pub const MAX_EXHAUSTIVE_LIMIT: usize = 11;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExhaustiveResult {
    pub n: usize,
    pub max_comparisons: u64,
    /// Lexicographically smallest permutation reaching the maximum.
    pub witness: Vec<u64>,
    pub permutations: u64,
}

pub fn exhaustive_max_comparisons(n: usize, limit: usize) -> Result<ExhaustiveResult> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    if n > limit || n > MAX_EXHAUSTIVE_LIMIT {
        return Err(Error::ExhaustiveLimit {
            n,
            limit: limit.min(MAX_EXHAUSTIVE_LIMIT),
        });
    }
    let mut best: Option<(u64, Vec<u64>)> = None;
    let mut scratch = vec![0u64; n];
    let mut permutations = 0u64;
    // itertools yields permutations of a sorted input in lexicographic order
    for perm in (1..=n as u64).permutations(n) {
        permutations += 1;
        scratch.copy_from_slice(&perm);
        let comparisons = buildheap_slice(&mut scratch).comparisons;
        if best.as_ref().is_none_or(|(max, _)| comparisons > *max) {
            best = Some((comparisons, perm));
        }
    }
    let (max_comparisons, witness) = best.expect("n >= 1 has at least one permutation");
    Ok(ExhaustiveResult {
        n,
        max_comparisons,
        witness,
        permutations,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RandomCheck {
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub max_comparisons: u64,
    pub max_swaps: u64,
    /// Runs exceeding the comparison bound or the swap bound.
    pub violations: usize,
    /// Runs whose output was not a heap or not a permutation of the input.
    pub invalid_outputs: usize,
    pub passed: bool,
}

pub fn sample_rng(n: usize, seed: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(n as u64);
    rng
}

pub fn random_bound_check(n: usize, samples: usize, seed: u64) -> Result<RandomCheck> {
    let bound = worst_case_bound(n)?;
    let swap_bound = height_sum_formula(n)?;
    let mut rng = sample_rng(n, seed);
    let mut check = RandomCheck {
        n,
        samples,
        seed,
        max_comparisons: 0,
        max_swaps: 0,
        violations: 0,
        invalid_outputs: 0,
        passed: false,
    };
    let mut keys: Vec<u64> = (1..=n as u64).collect();
    for _ in 0..samples {
        keys.sort_unstable();
        keys.shuffle(&mut rng);
        let mut h = HeapArray::new(keys.clone())?;
        let stats = buildheap(&mut h);
        check.max_comparisons = check.max_comparisons.max(stats.comparisons);
        check.max_swaps = check.max_swaps.max(stats.swaps);
        if stats.comparisons > bound || stats.swaps > swap_bound {
            check.violations += 1;
        }
        if !is_heap(&h, 1) || !h.is_permutation_of_range() {
            check.invalid_outputs += 1;
        }
    }
    check.passed = check.violations == 0 && check.invalid_outputs == 0;
    Ok(check)
}

/// One row of a range sweep. Serializes to the report columns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyRecord {
    pub n: usize,
    pub mu: u32,
    pub sigma: u32,
    pub lambda: u32,
    pub bound: u64,
    pub t_formula: u64,
    pub t_direct: u64,
    pub achieved: u64,
    pub exhaustive: Option<u64>,
    pub pass: bool,
    #[serde(skip)]
    pub edge_cover: bool,
    /// Witness output was a heap and a permutation of `1..=n`.
    #[serde(skip)]
    pub witness_valid: bool,
    #[serde(skip)]
    pub sampled: Option<RandomCheck>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub exhaustive_limit: usize,
    /// Random permutations per `n`; `None` skips sampling.
    pub samples: Option<usize>,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            exhaustive_limit: DEFAULT_EXHAUSTIVE_LIMIT,
            samples: None,
            seed: 0,
        }
    }
}

pub fn verify_one(n: usize, options: &VerifyOptions) -> Result<VerifyRecord> {
    let profile = binary_profile(n)?;
    let bound = worst_case_bound(n)?;
    let t_formula = height_sum_formula(n)?;
    let t_direct = height_sum_direct(n)?;

    let mut witness = worst_case(n)?;
    let achieved = buildheap(&mut witness).comparisons;
    let witness_valid = is_heap(&witness, 1) && witness.is_permutation_of_range();

    let exhaustive = if n <= options.exhaustive_limit {
        Some(exhaustive_max_comparisons(n, options.exhaustive_limit)?.max_comparisons)
    } else {
        None
    };
    let sampled = options
        .samples
        .map(|samples| random_bound_check(n, samples, options.seed))
        .transpose()?;
    let edge_cover = edge_cover_check(n);

    let pass = achieved == bound
        && t_formula == t_direct
        && edge_cover
        && witness_valid
        && exhaustive.is_none_or(|e| e == bound)
        && sampled.as_ref().is_none_or(|s| s.passed);

    Ok(VerifyRecord {
        n,
        mu: profile.mu,
        sigma: profile.sigma,
        lambda: profile.lambda,
        bound,
        t_formula,
        t_direct,
        achieved,
        exhaustive,
        pass,
        edge_cover,
        witness_valid,
        sampled,
    })
}

/// Sweeps `lo..=hi` with the default options apart from `exhaustive_limit`.
pub fn verify_range(lo: usize, hi: usize, exhaustive_limit: usize) -> Result<Vec<VerifyRecord>> {
    verify_range_with(
        lo,
        hi,
        &VerifyOptions {
            exhaustive_limit,
            ..VerifyOptions::default()
        },
    )
}

/// Evaluates every `n` in `lo..=hi` in parallel; rows come back ordered by
/// `n`. A failing `n` does not stop the sweep.
pub fn verify_range_with(
    lo: usize,
    hi: usize,
    options: &VerifyOptions,
) -> Result<Vec<VerifyRecord>> {
    if lo == 0 || lo > hi {
        return Err(Error::InvalidRange { lo, hi });
    }
    if options.exhaustive_limit > MAX_EXHAUSTIVE_LIMIT {
        return Err(Error::ExhaustiveLimit {
            n: options.exhaustive_limit,
            limit: MAX_EXHAUSTIVE_LIMIT,
        });
    }
    (lo..=hi)
        .into_par_iter()
        .map(|n| verify_one(n, options))
        .collect()
}
