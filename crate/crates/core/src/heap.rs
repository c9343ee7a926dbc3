//! Instrumented sift-down and Floyd's bottom-up heap construction.
//!
//! Only key-to-key comparisons are counted. Index tests such as the loop
//! guard `2i + 1 <= n` and the single-child test `2i == n` are free.

use std::collections::HashSet;
use std::ops::AddAssign;

use serde::Serialize;

use crate::error::{Error, Result};

/// Keys `H(1..=n)` of a complete binary tree, addressed from 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeapArray {
    keys: Vec<u64>,
}

impl HeapArray {
    /// Wraps `keys` as `H(1), ..., H(n)`. Keys must be distinct and there must
    /// be at least one.
    pub fn new(keys: Vec<u64>) -> Result<Self> {
        if keys.is_empty() {
            return Err(Error::EmptyArray);
        }
        let mut seen = HashSet::with_capacity(keys.len());
        if let Some(&dup) = keys.iter().find(|&&k| !seen.insert(k)) {
            return Err(Error::DuplicateKey(dup));
        }
        Ok(HeapArray { keys })
    }

    /// All-zero array used while a generator fills in keys.
    pub(crate) fn blank(n: usize) -> Self {
        HeapArray { keys: vec![0; n] }
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    /// `H(i)` for `1 <= i <= n`.
    pub fn get(&self, i: usize) -> u64 {
        self.keys[i - 1]
    }

    pub(crate) fn set(&mut self, i: usize, key: u64) {
        self.keys[i - 1] = key;
    }

    /// Keys in physical order, `H(1)` first.
    pub fn keys(&self) -> &[u64] {
        &self.keys
    }

    pub fn into_keys(self) -> Vec<u64> {
        self.keys
    }

    /// Whether the keys are exactly `1..=n` in some order.
    pub fn is_permutation_of_range(&self) -> bool {
        let n = self.len() as u64;
        let mut seen = vec![false; self.len()];
        self.keys
            .iter()
            .all(|&k| (1..=n).contains(&k) && !std::mem::replace(&mut seen[(k - 1) as usize], true))
    }
}

/// Counters for one heapdown or buildheap execution.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct RunStats {
    pub comparisons: u64,
    pub swaps: u64,
}

impl AddAssign for RunStats {
    fn add_assign(&mut self, rhs: Self) {
        self.comparisons += rhs.comparisons;
        self.swaps += rhs.swaps;
    }
}

/// Sift-down on a 0-based slice viewed as `H(1..=n)`.
fn sift_down(h: &mut [u64], mut i: usize, stats: &mut RunStats) {
    let n = h.len();
    while 2 * i < n {
        let mut k = 2 * i;
        stats.comparisons += 1;
        if h[k - 1] < h[k] {
            k += 1;
        }
        stats.comparisons += 1;
        if h[i - 1] < h[k - 1] {
            h.swap(i - 1, k - 1);
            stats.swaps += 1;
            i = k;
        } else {
            return;
        }
    }
    if 2 * i == n {
        stats.comparisons += 1;
        if h[i - 1] < h[n - 1] {
            h.swap(i - 1, n - 1);
            stats.swaps += 1;
        }
    }
}

/// Restores the heap property of the almost heap `H(i..=n)`, adding the
/// comparisons and swaps it performs to `stats`.
///
/// The precondition is not checked; see [`heapdown_validated`].
pub fn heapdown(h: &mut HeapArray, i: usize, stats: &mut RunStats) -> Result<()> {
    if i == 0 || i > h.len() {
        return Err(Error::NodeOutOfRange {
            node: i,
            n: h.len(),
        });
    }
    sift_down(&mut h.keys, i, stats);
    Ok(())
}

/// [`heapdown`] that first rejects inputs that are not almost heaps.
/// The check itself does not touch `stats`.
pub fn heapdown_validated(h: &mut HeapArray, i: usize, stats: &mut RunStats) -> Result<()> {
    if i == 0 || i > h.len() {
        return Err(Error::NodeOutOfRange {
            node: i,
            n: h.len(),
        });
    }
    if !is_almost_heap(h, i) {
        return Err(Error::NotAlmostHeap { from: i });
    }
    heapdown(h, i, stats)?;
    debug_assert!(is_heap(h, i));
    Ok(())
}

/// Floyd's construction: heapdown on `H(i..=n)` for `i = n/2` down to 1.
pub fn buildheap(h: &mut HeapArray) -> RunStats {
    let mut stats = RunStats::default();
    for i in (1..=h.len() / 2).rev() {
        sift_down(&mut h.keys, i, &mut stats);
    }
    stats
}

/// Comparison counts of [`buildheap`] on a raw key slice, in place.
/// Used by the searches that run millions of small constructions.
pub fn buildheap_slice(keys: &mut [u64]) -> RunStats {
    let mut stats = RunStats::default();
    for i in (1..=keys.len() / 2).rev() {
        sift_down(keys, i, &mut stats);
    }
    stats
}

/// Yields `(parent, child)` pairs with both ends in `from..=n`.
fn pairs_within(n: usize, from: usize) -> impl Iterator<Item = (usize, usize)> {
    let start = from.max(1).saturating_mul(2);
    (start..=n).map(|j| (j / 2, j))
}

/// Whether `H(from..=n)` satisfies `H(j / 2) >= H(j)` for every node `j`
/// whose parent lies in the range.
pub fn is_heap(h: &HeapArray, from: usize) -> bool {
    pairs_within(h.len(), from).all(|(p, c)| h.get(p) >= h.get(c))
}

/// Like [`is_heap`] with node `from` itself exempt.
pub fn is_almost_heap(h: &HeapArray, from: usize) -> bool {
    pairs_within(h.len(), from)
        .filter(|&(p, _)| p != from)
        .all(|(p, c)| h.get(p) >= h.get(c))
}

/// Whether the subtree rooted at `j` is a minimum heap.
pub fn is_min_heap_subtree(h: &HeapArray, j: usize) -> bool {
    let n = h.len();
    if j == 0 || j > n {
        return false;
    }
    let mut stack = vec![j];
    while let Some(p) = stack.pop() {
        for c in [2 * p, 2 * p + 1] {
            if c <= n {
                if h.get(p) > h.get(c) {
                    return false;
                }
                stack.push(c);
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{height_sum_formula, worst_case_bound};
    use itertools::Itertools;
    use proptest::prelude::*;

    fn arr(keys: &[u64]) -> HeapArray {
        HeapArray::new(keys.to_vec()).unwrap()
    }

    fn run_heapdown(keys: &[u64], i: usize) -> (Vec<u64>, RunStats) {
        let mut h = arr(keys);
        let mut stats = RunStats::default();
        heapdown(&mut h, i, &mut stats).unwrap();
        (h.into_keys(), stats)
    }

    #[test]
    fn heapdown_on_heap_still_costs_two() {
        let (keys, stats) = run_heapdown(&[3, 1, 2], 1);
        assert_eq!(keys, vec![3, 1, 2]);
        assert_eq!(
            stats,
            RunStats {
                comparisons: 2,
                swaps: 0
            }
        );
    }

    #[test]
    fn heapdown_swaps_with_larger_child() {
        let (keys, stats) = run_heapdown(&[1, 2, 3], 1);
        assert_eq!(keys, vec![3, 2, 1]);
        assert_eq!(
            stats,
            RunStats {
                comparisons: 2,
                swaps: 1
            }
        );
    }

    #[test]
    fn heapdown_single_child_costs_one() {
        let (keys, stats) = run_heapdown(&[1, 2], 1);
        assert_eq!(keys, vec![2, 1]);
        assert_eq!(
            stats,
            RunStats {
                comparisons: 1,
                swaps: 1
            }
        );
        let (keys, stats) = run_heapdown(&[2, 1], 1);
        assert_eq!(keys, vec![2, 1]);
        assert_eq!(
            stats,
            RunStats {
                comparisons: 1,
                swaps: 0
            }
        );
    }

    #[test]
    fn heapdown_leaf_is_free() {
        let (_, stats) = run_heapdown(&[1, 2, 3], 3);
        assert_eq!(stats, RunStats::default());
    }

    #[test]
    fn heapdown_index_errors() {
        let mut h = arr(&[1, 2, 3]);
        let mut stats = RunStats::default();
        assert!(matches!(
            heapdown(&mut h, 0, &mut stats),
            Err(Error::NodeOutOfRange { .. })
        ));
        assert!(matches!(
            heapdown(&mut h, 4, &mut stats),
            Err(Error::NodeOutOfRange { .. })
        ));
    }

    #[test]
    fn validated_heapdown_rejects_non_almost_heaps() {
        let mut h = arr(&[2, 1, 4, 3]);
        let mut stats = RunStats::default();
        assert!(matches!(
            heapdown_validated(&mut h, 1, &mut stats),
            Err(Error::NotAlmostHeap { from: 1 })
        ));
        assert_eq!(stats, RunStats::default());
        let mut h = arr(&[1, 4, 3, 2]);
        heapdown_validated(&mut h, 1, &mut stats).unwrap();
        assert_eq!(h.keys(), &[4, 2, 3, 1]);
        // two at node 1, one for the single child of node 2
        assert_eq!(
            stats,
            RunStats {
                comparisons: 3,
                swaps: 2
            }
        );
    }

    #[test]
    fn buildheap_examples() {
        let mut h = arr(&[1]);
        assert_eq!(buildheap(&mut h).comparisons, 0);
        let mut h = arr(&[1, 2]);
        let stats = buildheap(&mut h);
        assert_eq!(h.keys(), &[2, 1]);
        assert_eq!(stats.comparisons, 1);
    }

    #[test]
    fn buildheap_max_over_all_permutations_of_four() {
        let max = (1..=4u64)
            .permutations(4)
            .map(|p| buildheap(&mut arr(&p)).comparisons)
            .max()
            .unwrap();
        assert_eq!(max, 4);
    }

    #[test]
    fn empty_and_duplicate_arrays_are_rejected() {
        assert!(matches!(HeapArray::new(vec![]), Err(Error::EmptyArray)));
        assert!(matches!(
            HeapArray::new(vec![3, 1, 3]),
            Err(Error::DuplicateKey(3))
        ));
    }

    #[test]
    fn is_heap_examples() {
        assert!(is_heap(&arr(&[3, 2, 1]), 1));
        assert!(is_heap(&arr(&[1, 2, 3]), 2));
        assert!(!is_heap(&arr(&[1, 2, 3]), 1));
    }

    #[test]
    fn is_almost_heap_examples() {
        assert!(is_almost_heap(&arr(&[1, 3, 2]), 1));
        assert!(is_almost_heap(&arr(&[3, 1, 2]), 1));
        assert!(!is_almost_heap(&arr(&[2, 1, 4, 3]), 1));
    }

    #[test]
    fn is_min_heap_subtree_examples() {
        let h = arr(&[9, 1, 8, 2, 3]);
        assert!(is_min_heap_subtree(&h, 2));
        assert!(is_min_heap_subtree(&h, 5));
        assert!(!is_min_heap_subtree(&h, 1));
        assert!(!is_min_heap_subtree(&h, 6));
    }

    #[test]
    fn permutation_check() {
        assert!(arr(&[3, 1, 2]).is_permutation_of_range());
        assert!(!arr(&[3, 1, 4]).is_permutation_of_range());
    }

    fn permutation(max_len: usize) -> impl Strategy<Value = Vec<u64>> {
        (1..=max_len).prop_flat_map(|n| Just((1..=n as u64).collect::<Vec<_>>()).prop_shuffle())
    }

    proptest! {
        #[test]
        fn buildheap_is_correct_and_bounded(keys in permutation(300)) {
            let n = keys.len();
            let mut h = arr(&keys);
            let stats = buildheap(&mut h);
            prop_assert!(is_heap(&h, 1));
            let mut sorted = h.keys().to_vec();
            sorted.sort_unstable();
            let mut expected = keys.clone();
            expected.sort_unstable();
            prop_assert_eq!(sorted, expected);
            prop_assert!(stats.swaps <= stats.comparisons);
            prop_assert!(stats.comparisons <= worst_case_bound(n).unwrap());
            prop_assert!(stats.swaps <= height_sum_formula(n).unwrap());

            let mut again = arr(&keys);
            prop_assert_eq!(buildheap(&mut again), stats);
            prop_assert_eq!(again, h);
        }

        #[test]
        fn heapdown_restores_heap(keys in permutation(100), pick in any::<prop::sample::Index>()) {
            let n = keys.len();
            let i = pick.index(n) + 1;
            let mut h = arr(&keys);
            // heapify the strict subtrees below i first so H(i..n) is an almost heap
            for j in (i + 1..=n / 2).rev() {
                heapdown(&mut h, j, &mut RunStats::default()).unwrap();
            }
            prop_assert!(is_almost_heap(&h, i));
            let mut stats = RunStats::default();
            heapdown_validated(&mut h, i, &mut stats).unwrap();
            prop_assert!(is_heap(&h, i));
        }
    }
}
