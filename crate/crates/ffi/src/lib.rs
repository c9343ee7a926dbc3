//! C ABI for `floyd-bound`.
//!
//! Every fallible function returns an [`FbStatus`] and writes results through
//! out-pointers. On failure a description is available from
//! [`fb_last_error_message`] on the same thread. Heap arrays are handed out
//! as opaque `FbHeap` pointers that must be released with [`fb_heap_free`].
#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use floyd_bound::oracle::{exhaustive_max_comparisons, random_bound_check};
use floyd_bound::{Error, HeapArray, RunStats};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FbStatus {
    Ok = 0,
    NullPointer = 1,
    ZeroSize = 2,
    OutOfRange = 3,
    WrongParity = 4,
    NotMersenne = 5,
    DuplicateKey = 6,
    EmptyArray = 7,
    ExhaustiveLimit = 8,
    BufferTooSmall = 9,
    Overflow = 10,
    InvalidRange = 11,
    NotAlmostHeap = 12,
    Panic = 13,
    Other = 14,
}

impl From<&Error> for FbStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::ZeroSize => FbStatus::ZeroSize,
            Error::NodeOutOfRange { .. } | Error::NotInternal { .. } => FbStatus::OutOfRange,
            Error::Parity { .. } => FbStatus::WrongParity,
            Error::NotMersenne(_) => FbStatus::NotMersenne,
            Error::DuplicateKey(_) => FbStatus::DuplicateKey,
            Error::EmptyArray => FbStatus::EmptyArray,
            Error::ExhaustiveLimit { .. } => FbStatus::ExhaustiveLimit,
            Error::Overflow(_) => FbStatus::Overflow,
            Error::InvalidRange { .. } => FbStatus::InvalidRange,
            Error::NotAlmostHeap { .. } => FbStatus::NotAlmostHeap,
            _ => FbStatus::Other,
        }
    }
}

/// Opaque handle to a heap array.
pub struct FbHeap {
    inner: HeapArray,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct FbBinaryProfile {
    pub n: usize,
    pub mu: u32,
    pub sigma: u32,
    pub lambda: u32,
    pub k: u32,
    pub floor_log: u32,
    pub bit_length: u32,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FbRunStats {
    pub comparisons: u64,
    pub swaps: u64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct FbRandomCheck {
    pub max_comparisons: u64,
    pub max_swaps: u64,
    pub violations: usize,
    pub invalid_outputs: usize,
    pub passed: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

struct Failure(FbStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(FbStatus::from(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(FbStatus::NullPointer, format!("{what} is null"))
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> FbStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => FbStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("panic inside floyd-bound".to_owned());
            FbStatus::Panic
        }
    }
}

unsafe fn out_ref<'a, T>(ptr: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    ptr.as_mut().ok_or_else(|| null(what))
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn fb_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |m| m.as_ptr()))
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn fb_status_message(status: FbStatus) -> *const c_char {
    let text: &'static CStr = match status {
        FbStatus::Ok => c"ok",
        FbStatus::NullPointer => c"null pointer argument",
        FbStatus::ZeroSize => c"tree size must be at least 1",
        FbStatus::OutOfRange => c"node index out of range",
        FbStatus::WrongParity => c"wrong parity of n",
        FbStatus::NotMersenne => c"n + 1 is not a power of two",
        FbStatus::DuplicateKey => c"duplicate key",
        FbStatus::EmptyArray => c"empty key array",
        FbStatus::ExhaustiveLimit => c"exhaustive search limit exceeded",
        FbStatus::BufferTooSmall => c"output buffer too small",
        FbStatus::Overflow => c"result does not fit in 64 bits",
        FbStatus::InvalidRange => c"invalid range",
        FbStatus::NotAlmostHeap => c"input is not an almost heap",
        FbStatus::Panic => c"internal panic",
        FbStatus::Other => c"other error",
    };
    text.as_ptr()
}

#[no_mangle]
pub extern "C" fn fb_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

#[no_mangle]
pub unsafe extern "C" fn fb_binary_profile(n: usize, out: *mut FbBinaryProfile) -> FbStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let p = floyd_bound::binary_profile(n)?;
        *out = FbBinaryProfile {
            n,
            mu: p.mu,
            sigma: p.sigma,
            lambda: p.lambda,
            k: p.k,
            floor_log: p.floor_log,
            bit_length: p.bit_length,
        };
        Ok(())
    })
}

unsafe fn write_u64(out: *mut u64, value: impl FnOnce() -> floyd_bound::Result<u64>) -> FbStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        *out = value()?;
        Ok(())
    })
}

/// `2n - 2 mu(n) - sigma(n)`.
#[no_mangle]
pub unsafe extern "C" fn fb_worst_case_bound(n: usize, out: *mut u64) -> FbStatus {
    write_u64(out, || floyd_bound::worst_case_bound(n))
}

#[no_mangle]
pub unsafe extern "C" fn fb_height_sum_formula(n: usize, out: *mut u64) -> FbStatus {
    write_u64(out, || floyd_bound::height_sum_formula(n))
}

#[no_mangle]
pub unsafe extern "C" fn fb_height_sum_direct(n: usize, out: *mut u64) -> FbStatus {
    write_u64(out, || floyd_bound::height_sum_direct(n))
}

/// Fails with `FB_STATUS_NOT_MERSENNE` unless `n + 1` is a power of two.
#[no_mangle]
pub unsafe extern "C" fn fb_kruskal_bound(n: usize, out: *mut u64) -> FbStatus {
    write_u64(out, || floyd_bound::kruskal_bound(n))
}

#[no_mangle]
pub unsafe extern "C" fn fb_edge_cover_check(n: usize, out: *mut bool) -> FbStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        *out = floyd_bound::edge_cover(n)?.covered;
        Ok(())
    })
}

fn into_handle(h: HeapArray) -> *mut FbHeap {
    Box::into_raw(Box::new(FbHeap { inner: h }))
}

/// Copies `len` distinct keys into a new heap handle.
#[no_mangle]
pub unsafe extern "C" fn fb_heap_from_keys(
    keys: *const u64,
    len: usize,
    out: *mut *mut FbHeap,
) -> FbStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        if len == 0 {
            return Err(Error::EmptyArray.into());
        }
        if keys.is_null() {
            return Err(null("keys"));
        }
        let keys = std::slice::from_raw_parts(keys, len).to_vec();
        *out = into_handle(HeapArray::new(keys)?);
        Ok(())
    })
}

/// New handle holding the worst-case input for `n` keys.
#[no_mangle]
pub unsafe extern "C" fn fb_heap_worst_case(n: usize, out: *mut *mut FbHeap) -> FbStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        *out = into_handle(floyd_bound::worst_case(n)?);
        Ok(())
    })
}

/// Releases a handle. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn fb_heap_free(heap: *mut FbHeap) {
    if !heap.is_null() {
        drop(Box::from_raw(heap));
    }
}

/// Number of keys, or 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn fb_heap_len(heap: *const FbHeap) -> usize {
    heap.as_ref().map_or(0, |h| h.inner.len())
}

/// Copies the keys, `H(1)` first, into `buf`, which must hold at least
/// `fb_heap_len(heap)` values.
#[no_mangle]
pub unsafe extern "C" fn fb_heap_keys(
    heap: *const FbHeap,
    buf: *mut u64,
    buf_len: usize,
) -> FbStatus {
    guard(|| {
        let heap = heap.as_ref().ok_or_else(|| null("heap"))?;
        let keys = heap.inner.keys();
        if buf_len < keys.len() {
            return Err(Failure(
                FbStatus::BufferTooSmall,
                format!("buffer holds {buf_len} keys, need {}", keys.len()),
            ));
        }
        if buf.is_null() {
            return Err(null("buf"));
        }
        std::slice::from_raw_parts_mut(buf, keys.len()).copy_from_slice(keys);
        Ok(())
    })
}

/// Runs Floyd's construction in place and writes its counters to `out`.
#[no_mangle]
pub unsafe extern "C" fn fb_heap_build(heap: *mut FbHeap, out: *mut FbRunStats) -> FbStatus {
    guard(|| {
        let heap = heap.as_mut().ok_or_else(|| null("heap"))?;
        let out = out_ref(out, "out")?;
        let stats = floyd_bound::buildheap(&mut heap.inner);
        *out = FbRunStats {
            comparisons: stats.comparisons,
            swaps: stats.swaps,
        };
        Ok(())
    })
}

/// Sift-down from node `i` (1-based). Counters are added to `stats`.
#[no_mangle]
pub unsafe extern "C" fn fb_heap_heapdown(
    heap: *mut FbHeap,
    i: usize,
    stats: *mut FbRunStats,
) -> FbStatus {
    guard(|| {
        let heap = heap.as_mut().ok_or_else(|| null("heap"))?;
        let stats = out_ref(stats, "stats")?;
        let mut run = RunStats {
            comparisons: stats.comparisons,
            swaps: stats.swaps,
        };
        floyd_bound::heapdown(&mut heap.inner, i, &mut run)?;
        *stats = FbRunStats {
            comparisons: run.comparisons,
            swaps: run.swaps,
        };
        Ok(())
    })
}

/// Whether `H(from..n)` is a max heap; `from` is 1-based.
#[no_mangle]
pub unsafe extern "C" fn fb_heap_is_heap(
    heap: *const FbHeap,
    from: usize,
    out: *mut bool,
) -> FbStatus {
    guard(|| {
        let heap = heap.as_ref().ok_or_else(|| null("heap"))?;
        let out = out_ref(out, "out")?;
        let n = heap.inner.len();
        if from == 0 || from > n {
            return Err(Error::NodeOutOfRange { node: from, n }.into());
        }
        *out = floyd_bound::is_heap(&heap.inner, from);
        Ok(())
    })
}

/// Maximum comparison count over all permutations of `1..=n`. When
/// `witness` is not NULL the lexicographically first maximizing permutation
/// is copied into it (`witness_len >= n` required).
#[no_mangle]
pub unsafe extern "C" fn fb_exhaustive_max_comparisons(
    n: usize,
    limit: usize,
    out_max: *mut u64,
    witness: *mut u64,
    witness_len: usize,
) -> FbStatus {
    guard(|| {
        let out_max = out_ref(out_max, "out_max")?;
        if !witness.is_null() && witness_len < n {
            return Err(Failure(
                FbStatus::BufferTooSmall,
                format!("witness buffer holds {witness_len} keys, need {n}"),
            ));
        }
        let result = exhaustive_max_comparisons(n, limit)?;
        *out_max = result.max_comparisons;
        if !witness.is_null() {
            std::slice::from_raw_parts_mut(witness, n).copy_from_slice(&result.witness);
        }
        Ok(())
    })
}

/// Seeded random permutations checked against the comparison and swap bounds.
#[no_mangle]
pub unsafe extern "C" fn fb_random_bound_check(
    n: usize,
    samples: usize,
    seed: u64,
    out: *mut FbRandomCheck,
) -> FbStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let check = random_bound_check(n, samples, seed)?;
        *out = FbRandomCheck {
            max_comparisons: check.max_comparisons,
            max_swaps: check.max_swaps,
            violations: check.violations,
            invalid_outputs: check.invalid_outputs,
            passed: check.passed,
        };
        Ok(())
    })
}
