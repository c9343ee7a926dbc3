/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef FLOYD_BOUND_H
#define FLOYD_BOUND_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FbStatus {
  FB_STATUS_OK = 0,
  FB_STATUS_NULL_POINTER = 1,
  FB_STATUS_ZERO_SIZE = 2,
  FB_STATUS_OUT_OF_RANGE = 3,
  FB_STATUS_WRONG_PARITY = 4,
  FB_STATUS_NOT_MERSENNE = 5,
  FB_STATUS_DUPLICATE_KEY = 6,
  FB_STATUS_EMPTY_ARRAY = 7,
  FB_STATUS_EXHAUSTIVE_LIMIT = 8,
  FB_STATUS_BUFFER_TOO_SMALL = 9,
  FB_STATUS_OVERFLOW = 10,
  FB_STATUS_INVALID_RANGE = 11,
  FB_STATUS_NOT_ALMOST_HEAP = 12,
  FB_STATUS_PANIC = 13,
  FB_STATUS_OTHER = 14,
} FbStatus;

/*
 Opaque handle to a heap array.
 */
typedef struct FbHeap FbHeap;

typedef struct FbBinaryProfile {
  size_t n;
  uint32_t mu;
  uint32_t sigma;
  uint32_t lambda;
  uint32_t k;
  uint32_t floor_log;
  uint32_t bit_length;
} FbBinaryProfile;

typedef struct FbRunStats {
  uint64_t comparisons;
  uint64_t swaps;
} FbRunStats;

typedef struct FbRandomCheck {
  uint64_t max_comparisons;
  uint64_t max_swaps;
  size_t violations;
  size_t invalid_outputs;
  bool passed;
} FbRandomCheck;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the most recent failure on this thread, or NULL. The pointer
 stays valid until the next failing call on this thread.
 */
const char *fb_last_error_message(void);

/*
 Static description of a status code.
 */
const char *fb_status_message(enum FbStatus status);

const char *fb_version(void);

enum FbStatus fb_binary_profile(size_t n, struct FbBinaryProfile *out);

/*
 `2n - 2 mu(n) - sigma(n)`.
 */
enum FbStatus fb_worst_case_bound(size_t n, uint64_t *out);

enum FbStatus fb_height_sum_formula(size_t n, uint64_t *out);

enum FbStatus fb_height_sum_direct(size_t n, uint64_t *out);

/*
 Fails with `FB_STATUS_NOT_MERSENNE` unless `n + 1` is a power of two.
 */
enum FbStatus fb_kruskal_bound(size_t n, uint64_t *out);

enum FbStatus fb_edge_cover_check(size_t n, bool *out);

/*
 Copies `len` distinct keys into a new heap handle.
 */
enum FbStatus fb_heap_from_keys(const uint64_t *keys, size_t len, struct FbHeap **out);

/*
 New handle holding the worst-case input for `n` keys.
 */
enum FbStatus fb_heap_worst_case(size_t n, struct FbHeap **out);

/*
 Releases a handle. NULL is ignored.
 */
void fb_heap_free(struct FbHeap *heap);

/*
 Number of keys, or 0 for NULL.
 */
size_t fb_heap_len(const struct FbHeap *heap);

/*
 Copies the keys, `H(1)` first, into `buf`, which must hold at least
 `fb_heap_len(heap)` values.
 */
enum FbStatus fb_heap_keys(const struct FbHeap *heap, uint64_t *buf, size_t buf_len);

/*
 Runs Floyd's construction in place and writes its counters to `out`.
 */
enum FbStatus fb_heap_build(struct FbHeap *heap, struct FbRunStats *out);

/*
 Sift-down from node `i` (1-based). Counters are added to `stats`.
 */
enum FbStatus fb_heap_heapdown(struct FbHeap *heap, size_t i, struct FbRunStats *stats);

/*
 Whether `H(from..n)` is a max heap; `from` is 1-based.
 */
enum FbStatus fb_heap_is_heap(const struct FbHeap *heap, size_t from, bool *out);

/*
 Maximum comparison count over all permutations of `1..=n`. When
 `witness` is not NULL the lexicographically first maximizing permutation
 is copied into it (`witness_len >= n` required).
 */
enum FbStatus fb_exhaustive_max_comparisons(size_t n,
                                            size_t limit,
                                            uint64_t *out_max,
                                            uint64_t *witness,
                                            size_t witness_len);

/*
 Seeded random permutations checked against the comparison and swap bounds.
 */
enum FbStatus fb_random_bound_check(size_t n,
                                    size_t samples,
                                    uint64_t seed,
                                    struct FbRandomCheck *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FLOYD_BOUND_H */
