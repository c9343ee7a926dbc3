use std::fmt;

/// Errors produced by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// The number of keys must be at least one.
    #[error("tree size must be at least 1")]
    ZeroSize,

    #[error("node {node} is outside 1..={n}")]
    NodeOutOfRange { node: usize, n: usize },

    #[error("node {node} is not an internal node of a tree with {n} nodes")]
    NotInternal { node: usize, n: usize },

    #[error("n = {n} must be {expected}")]
    Parity { n: usize, expected: Parity },

    #[error("n + 1 = {} is not a power of two", .0 + 1)]
    NotMersenne(usize),

    #[error("comparison count for n = {0} does not fit in 64 bits")]
    Overflow(usize),

    #[error("subtree at node {root} has {expected} nodes but {actual} keys were supplied")]
    BlockSize {
        root: usize,
        expected: usize,
        actual: usize,
    },

    #[error("keys for node {root} are not sorted ascending")]
    UnsortedBlock { root: usize },

    #[error("exhaustive search refused for n = {n} (limit {limit})")]
    ExhaustiveLimit { n: usize, limit: usize },

    #[error("invalid range {lo}..={hi}")]
    InvalidRange { lo: usize, hi: usize },

    #[error("heap array is empty")]
    EmptyArray,

    #[error("duplicate key {0}")]
    DuplicateKey(u64),

    #[error("H({from}..n) is not an almost heap")]
    NotAlmostHeap { from: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Odd => f.write_str("odd"),
            Parity::Even => f.write_str("even"),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
