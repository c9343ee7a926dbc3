//! Floyd's bottom-up heap construction with exact comparison accounting.
//!
//! The crate computes the worst-case comparison count `2n - 2 mu(n) - sigma(n)`
//! of the construction, builds inputs that attain it, and checks both sides
//! independently: by running the instrumented algorithm on the generated
//! inputs, by exhaustive search over all permutations for small `n`, and by
//! random sampling for larger `n`.

pub mod adversary;
pub mod error;
pub mod heap;
pub mod numeric;
pub mod oracle;
pub mod report;
pub mod treegeom;

pub use adversary::{fill_min_heap_block, worst_case, worst_case_even, worst_case_odd};
pub use error::{Error, Parity, Result};
pub use heap::{
    buildheap, heapdown, heapdown_validated, is_almost_heap, is_heap, is_min_heap_subtree,
    HeapArray, RunStats,
};
pub use numeric::{
    binary_profile, bound_report, height_sum_formula, kruskal_bound, worst_case_bound,
    BinaryProfile, BoundReport,
};
pub use treegeom::{
    distinguished_path, edge_cover, edge_cover_check, height_sum_direct, leftmost_path,
    partition_abcd, special_path, subtree_height, Direction, EdgeCover, Partition, PathDescriptor,
    SpecialPath,
};
