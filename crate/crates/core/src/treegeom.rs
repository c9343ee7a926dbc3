//! Index arithmetic on the complete binary tree with nodes `1..=n`.
//!
//! Node `j` has children `2j` and `2j + 1` when those indices are `<= n`.
//! Heights count edges, so a leaf has height 0. Every enumeration is in
//! ascending node order.

use serde::Serialize;

use crate::error::{Error, Parity, Result};
use crate::numeric::binary_profile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Left,
    Right,
}

/// The path from the root to the last node `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathDescriptor {
    /// One node per depth, `nodes[0] == 1` and the last entry is `n`.
    pub nodes: Vec<usize>,
    /// `digits[d]` is the binary digit of `n` that corresponds to `nodes[d]`.
    pub digits: Vec<u8>,
    /// `edge_directions[d]` is the edge from `nodes[d]` to `nodes[d + 1]`.
    pub edge_directions: Vec<Direction>,
}

impl PathDescriptor {
    /// Height of the path node at depth `depth`.
    pub fn height_at(&self, depth: usize) -> usize {
        self.nodes.len() - 1 - depth
    }

    pub fn contains(&self, node: usize) -> bool {
        node >= 1 && self.nodes.get(depth(node)) == Some(&node)
    }
}

/// A right edge out of `root` followed by left edges down to a leaf.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecialPath {
    pub root: usize,
    pub nodes: Vec<usize>,
    pub length: usize,
}

/// Node sets used by the even-size worst-case construction.
///
/// `a_nodes` lie left of the root-to-`n` path, `d_nodes` right of it.
/// Path nodes of height `0..=sigma(n)` form `c_nodes`, the rest `b_nodes`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    pub a_nodes: Vec<usize>,
    pub b_nodes: Vec<usize>,
    pub c_nodes: Vec<usize>,
    pub d_nodes: Vec<usize>,
}

/// Depth of node `j >= 1` (the root is at depth 0).
pub fn depth(j: usize) -> usize {
    j.ilog2() as usize
}

fn check_node(j: usize, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    if j == 0 || j > n {
        return Err(Error::NodeOutOfRange { node: j, n });
    }
    Ok(())
}

/// Height of the subtree rooted at `j`, found by walking the leftmost
/// descendants until they leave the tree.
pub fn subtree_height(j: usize, n: usize) -> Result<usize> {
    check_node(j, n)?;
    let mut height = 0;
    let mut node = j;
    while node <= n / 2 {
        node *= 2;
        height += 1;
    }
    Ok(height)
}

/// Number of nodes in the subtree rooted at `j`.
pub fn subtree_size(j: usize, n: usize) -> Result<usize> {
    check_node(j, n)?;
    Ok(subtree_levels(j, n).map(|(lo, hi)| hi - lo + 1).sum())
}

/// Inclusive index ranges of the subtree at `j`, one per level, top down.
pub(crate) fn subtree_levels(j: usize, n: usize) -> impl Iterator<Item = (usize, usize)> {
    let mut lo = j;
    let mut hi = j;
    std::iter::from_fn(move || {
        if lo == 0 || lo > n {
            return None;
        }
        let level = (lo, hi.min(n));
        lo = lo.checked_mul(2).unwrap_or(0);
        hi = hi
            .checked_mul(2)
            .and_then(|h| h.checked_add(1))
            .unwrap_or(usize::MAX);
        Some(level)
    })
}

pub fn distinguished_path(n: usize) -> Result<PathDescriptor> {
    let profile = binary_profile(n)?;
    let mut nodes: Vec<usize> =
        std::iter::successors(Some(n), |&j| (j > 1).then_some(j / 2)).collect();
    nodes.reverse();
    let edge_directions = nodes
        .windows(2)
        .map(|w| {
            if w[1] == 2 * w[0] {
                Direction::Left
            } else {
                Direction::Right
            }
        })
        .collect();
    Ok(PathDescriptor {
        nodes,
        digits: profile.digits,
        edge_directions,
    })
}

pub fn special_path(j: usize, n: usize) -> Result<SpecialPath> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    if j == 0 || j > n / 2 {
        return Err(Error::NotInternal { node: j, n });
    }
    let mut nodes = vec![j];
    if let Some(right) = (2 * j).checked_add(1).filter(|&r| r <= n) {
        let mut node = right;
        nodes.push(node);
        while node <= n / 2 {
            node *= 2;
            nodes.push(node);
        }
    }
    let length = nodes.len() - 1;
    Ok(SpecialPath {
        root: j,
        nodes,
        length,
    })
}

/// Nodes `1, 2, 4, ...` down to the last level.
pub fn leftmost_path(n: usize) -> Result<Vec<usize>> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    Ok(std::iter::successors(Some(1usize), |&j| j.checked_mul(2).filter(|&c| c <= n)).collect())
}

/// Outcome of tiling the tree's edges with special paths plus the
/// leftmost path. An edge is identified by its child node.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeCover {
    pub n: usize,
    pub edges: usize,
    pub special_length_sum: usize,
    pub leftmost_edges: usize,
    /// Edges covered more than once.
    pub overlaps: usize,
    /// Edges not covered at all.
    pub uncovered: usize,
    pub covered: bool,
}

pub fn edge_cover(n: usize) -> Result<EdgeCover> {
    let profile = binary_profile(n)?;
    let mut hits = vec![0u32; n + 1];
    let mut special_length_sum = 0;
    for j in 1..=n / 2 {
        let sp = special_path(j, n)?;
        special_length_sum += sp.length;
        for w in sp.nodes.windows(2) {
            debug_assert_eq!(w[1] / 2, w[0]);
            hits[w[1]] += 1;
        }
    }
    let leftmost = leftmost_path(n)?;
    for &child in &leftmost[1..] {
        hits[child] += 1;
    }
    let overlaps = hits[2..].iter().filter(|&&h| h > 1).count();
    let uncovered = hits[2..].iter().filter(|&&h| h == 0).count();
    let edges = n - 1;
    let expected_sum = edges - profile.floor_log as usize;
    Ok(EdgeCover {
        n,
        edges,
        special_length_sum,
        leftmost_edges: leftmost.len() - 1,
        overlaps,
        uncovered,
        covered: overlaps == 0 && uncovered == 0 && special_length_sum == expected_sum,
    })
}

pub fn edge_cover_check(n: usize) -> bool {
    edge_cover(n).is_ok_and(|c| c.covered)
}

/// Sum of subtree heights over the internal nodes, one node at a time.
pub fn height_sum_direct(n: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    (1..=n / 2).try_fold(0u64, |acc, j| Ok(acc + subtree_height(j, n)? as u64))
}

/// Roots of the maximal subtrees that hang off the root-to-`n` path, split
/// into those left and right of it, ascending.
pub(crate) fn off_path_roots(path: &PathDescriptor) -> (Vec<usize>, Vec<usize>) {
    let n = *path.nodes.last().expect("path is never empty");
    let mut left = Vec::new();
    let mut right = Vec::new();
    for w in path.nodes.windows(2) {
        let (parent, next) = (w[0], w[1]);
        if next == 2 * parent {
            if 2 * parent < n {
                right.push(2 * parent + 1);
            }
        } else {
            left.push(2 * parent);
        }
    }
    left.sort_unstable();
    right.sort_unstable();
    (left, right)
}

pub fn partition_abcd(n: usize) -> Result<Partition> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    if n % 2 == 1 {
        return Err(Error::Parity {
            n,
            expected: Parity::Even,
        });
    }
    let path = distinguished_path(n)?;
    let k = n.trailing_zeros() as usize;
    let mut partition = Partition {
        a_nodes: Vec::new(),
        b_nodes: Vec::new(),
        c_nodes: Vec::new(),
        d_nodes: Vec::new(),
    };
    for j in 1..=n {
        let d = depth(j);
        let on_path = path.nodes[d];
        let set = match j.cmp(&on_path) {
            std::cmp::Ordering::Less => &mut partition.a_nodes,
            std::cmp::Ordering::Greater => &mut partition.d_nodes,
            std::cmp::Ordering::Equal if path.height_at(d) <= k => &mut partition.c_nodes,
            std::cmp::Ordering::Equal => &mut partition.b_nodes,
        };
        set.push(j);
    }
    Ok(partition)
}
