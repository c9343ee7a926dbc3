//! Worst-case inputs for Floyd's construction.
//!
//! Odd `n`: the root-to-`n` path holds the largest keys, increasing with
//! depth, and every subtree hanging off the path is a minimum heap.
//!
//! Even `n`: the nodes split into `A | B | C | D` (see
//! [`partition_abcd`]). Keys are assigned in descending blocks
//! `A > B > C > D`; the `B` and `C` path segments increase with depth and the
//! off-path subtrees in `A` and `D` are minimum heaps.
//!
//! When several off-path subtrees share a key block, roots are taken in
//! ascending index order and each receives a contiguous ascending run of
//! keys laid out breadth first.

use crate::error::{Error, Parity, Result};
use crate::heap::HeapArray;
use crate::treegeom::{
    distinguished_path, off_path_roots, partition_abcd, subtree_levels, subtree_size,
};

/// Writes `keys` into the subtree at `root` in breadth-first order, which
/// makes that subtree a minimum heap.
pub fn fill_min_heap_block(h: &mut HeapArray, root: usize, keys: &[u64]) -> Result<()> {
    let n = h.len();
    let expected = subtree_size(root, n)?;
    if keys.len() != expected {
        return Err(Error::BlockSize {
            root,
            expected,
            actual: keys.len(),
        });
    }
    if keys.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::UnsortedBlock { root });
    }
    let nodes = subtree_levels(root, n).flat_map(|(lo, hi)| lo..=hi);
    for (node, &key) in nodes.zip(keys) {
        h.set(node, key);
    }
    Ok(())
}

/// Fills each subtree in `roots` with consecutive keys starting at `first`.
/// Returns the next unused key.
fn fill_blocks(h: &mut HeapArray, roots: &[usize], first: u64) -> Result<u64> {
    let mut next = first;
    for &root in roots {
        let size = subtree_size(root, h.len())? as u64;
        let block: Vec<u64> = (next..next + size).collect();
        fill_min_heap_block(h, root, &block)?;
        next += size;
    }
    Ok(next)
}

fn assign_increasing(h: &mut HeapArray, nodes: &[usize], first: u64) {
    for (offset, &node) in nodes.iter().enumerate() {
        h.set(node, first + offset as u64);
    }
}

pub fn worst_case_odd(n: usize) -> Result<HeapArray> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    if n.is_multiple_of(2) {
        return Err(Error::Parity {
            n,
            expected: Parity::Odd,
        });
    }
    let path = distinguished_path(n)?;
    let mut h = HeapArray::blank(n);
    let path_first = (n - path.nodes.len() + 1) as u64;
    assign_increasing(&mut h, &path.nodes, path_first);

    let (left, right) = off_path_roots(&path);
    let mut roots = [left, right].concat();
    roots.sort_unstable();
    let next = fill_blocks(&mut h, &roots, 1)?;
    debug_assert_eq!(next, path_first);
    Ok(h)
}

pub fn worst_case_even(n: usize) -> Result<HeapArray> {
    let part = partition_abcd(n)?;
    let path = distinguished_path(n)?;
    let (left, right) = off_path_roots(&path);
    let mut h = HeapArray::blank(n);

    let d_end = fill_blocks(&mut h, &right, 1)?;
    debug_assert_eq!(d_end, part.d_nodes.len() as u64 + 1);
    // path nodes are stored in ascending index order, which is top down
    assign_increasing(&mut h, &part.c_nodes, d_end);
    let b_first = d_end + part.c_nodes.len() as u64;
    assign_increasing(&mut h, &part.b_nodes, b_first);
    let a_first = b_first + part.b_nodes.len() as u64;
    let end = fill_blocks(&mut h, &left, a_first)?;
    debug_assert_eq!(end, n as u64 + 1);
    Ok(h)
}

/// The worst-case witness for `n` keys, by parity.
pub fn worst_case(n: usize) -> Result<HeapArray> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    if n % 2 == 1 {
        worst_case_odd(n)
    } else {
        worst_case_even(n)
    }
}
