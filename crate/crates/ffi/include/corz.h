#ifndef CORZ_H
#define CORZ_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum CorzStatus {
  CORZ_STATUS_OK = 0,
  CORZ_STATUS_NULL_POINTER = 1,
  CORZ_STATUS_INVALID_ARGUMENT = 2,
  CORZ_STATUS_INVALID_PARTITION = 3,
  CORZ_STATUS_SIZE_MISMATCH = 4,
  CORZ_STATUS_NOT_A_CORE = 5,
  CORZ_STATUS_INVALID_ABACUS = 6,
  CORZ_STATUS_INVALID_MODULUS = 7,
  CORZ_STATUS_CAP_EXCEEDED = 8,
  CORZ_STATUS_INTERNAL = 9,
  CORZ_STATUS_PANIC = 10,
} CorzStatus;

// A canonical abacus of an ℓ-core.
typedef struct CorzAbacus CorzAbacus;

// An integer partition.
typedef struct CorzPartition CorzPartition;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or NULL. Valid until
// the next failing call on the same thread; do not free.
const char *corz_last_error(void);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void corz_string_free(char *s);

// Builds a partition from `len` weakly decreasing positive parts.
//
// # Safety
// `parts` must point to `len` readable values (or be NULL when `len` is 0).
enum CorzStatus corz_partition_new(const size_t *parts, size_t len, struct CorzPartition **out);

// Parses `"5,4,1"`, `"(5,4,1)"`, `"5 4 1"` or `"()"`.
//
// # Safety
// `text` must be a NUL-terminated string.
enum CorzStatus corz_partition_parse(const char *text, struct CorzPartition **out);

// # Safety
// `p` must come from this library and not have been freed. NULL is ignored.
void corz_partition_free(struct CorzPartition *p);

// `|λ|`, or 0 for NULL.
//
// # Safety
// `p` must be NULL or a live handle.
size_t corz_partition_size(const struct CorzPartition *p);

// Number of parts, or 0 for NULL.
//
// # Safety
// `p` must be NULL or a live handle.
size_t corz_partition_len(const struct CorzPartition *p);

// Copies up to `cap` parts into `buf`; returns the total number of parts.
//
// # Safety
// `p` must be a live handle and `buf` must have room for `cap` values.
size_t corz_partition_parts(const struct CorzPartition *p, size_t *buf, size_t cap);

// Renders `(5,4,1)`; free the result with [`corz_string_free`].
//
// # Safety
// `p` must be a live handle.
enum CorzStatus corz_partition_to_string(const struct CorzPartition *p, char **out);

// Conjugate partition as a new handle.
//
// # Safety
// `p` must be a live handle.
enum CorzStatus corz_partition_conjugate(const struct CorzPartition *p, struct CorzPartition **out);

// Whether no hook length of `p` is divisible by `ell` (`ell >= 2`).
//
// # Safety
// `p` must be a live handle.
enum CorzStatus corz_is_core(const struct CorzPartition *p, size_t ell, bool *out);

// Whether no part of `p` is divisible by `a` (`a >= 2`).
//
// # Safety
// `p` must be a live handle.
enum CorzStatus corz_is_regular(const struct CorzPartition *p, size_t a, bool *out);

// p(n) in decimal.
//
// # Safety
// `out` must be writable.
enum CorzStatus corz_count_p(size_t n, char **out);

// Partitions of `n` with no part divisible by `a`, in decimal.
//
// # Safety
// `out` must be writable.
enum CorzStatus corz_count_p_regular(size_t n, size_t a, char **out);

// Number of `t`-cores of `n`, in decimal.
//
// # Safety
// `out` must be writable.
enum CorzStatus corz_count_cores(size_t n, size_t t, char **out);

// Character value `χ_λ(μ)` in decimal (may be negative).
//
// # Safety
// `lam` and `mu` must be live handles.
enum CorzStatus corz_mn_character(const struct CorzPartition *lam,
                                  const struct CorzPartition *mu,
                                  char **out);

// True when a part of `μ` is missing from the hook lengths of `λ`, which
// forces `χ_λ(μ) = 0`.
//
// # Safety
// `lam` and `mu` must be live handles.
enum CorzStatus corz_quick_vanish(const struct CorzPartition *lam,
                                  const struct CorzPartition *mu,
                                  bool *out);

// Canonical abacus of an `ell`-core.
//
// # Safety
// `p` must be a live handle.
enum CorzStatus corz_to_abacus(const struct CorzPartition *p, size_t ell, struct CorzAbacus **out);

// Abacus from `ell` rod heights. Rod 0 must be empty for
// [`corz_from_abacus`] to accept it.
//
// # Safety
// `cols` must point to `ell` readable values.
enum CorzStatus corz_abacus_new(size_t ell, const size_t *cols, struct CorzAbacus **out);

// # Safety
// `ab` must come from this library and not have been freed. NULL is ignored.
void corz_abacus_free(struct CorzAbacus *ab);

// Number of rods, or 0 for NULL.
//
// # Safety
// `ab` must be NULL or a live handle.
size_t corz_abacus_ell(const struct CorzAbacus *ab);

// Copies up to `cap` rod heights into `buf`; returns the number of rods.
//
// # Safety
// `ab` must be a live handle and `buf` must have room for `cap` values.
size_t corz_abacus_cols(const struct CorzAbacus *ab, size_t *buf, size_t cap);

// Size of the core an abacus represents.
//
// # Safety
// `ab` must be a live handle.
enum CorzStatus corz_abacus_size(const struct CorzAbacus *ab, size_t *out);

// The core represented by a canonical abacus.
//
// # Safety
// `ab` must be a live handle.
enum CorzStatus corz_from_abacus(const struct CorzAbacus *ab, struct CorzPartition **out);

// `1/α_ℓ` in decimal, for primes `ell >= 5`.
//
// # Safety
// `out` must be writable.
enum CorzStatus corz_inv_alpha(size_t ell, char **out);

// `N_ℓ`, above which every ℓ-core has a part divisible by ℓ (prime `ell`).
//
// # Safety
// `out` must be writable.
enum CorzStatus corz_n_ell(size_t ell, uint64_t *out);

// `(ℓ² - 1)/24` for primes `ell >= 5`.
//
// # Safety
// `out` must be writable.
enum CorzStatus corz_delta_ell(size_t ell, size_t *out);

// `(p(n) - p_ℓ(n)) · c_ℓ(n)` in decimal.
//
// # Safety
// `out` must be writable.
enum CorzStatus corz_z_lower_bound(size_t n, size_t ell, char **out);

// Exact count of vanishing `χ_λ(μ)` with `λ` an ℓ-core of `n`; refuses
// `n > cap`.
//
// # Safety
// `out` must be writable.
enum CorzStatus corz_z_exact(size_t n, size_t ell, size_t cap, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CORZ_H */
