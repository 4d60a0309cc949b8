#ifndef BC1_JACOBI_H
#define BC1_JACOBI_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdint.h>
#include <stdbool.h>

typedef enum Bc1Status {
  BC1_STATUS_OK = 0,
  BC1_STATUS_NULL_POINTER = 1,
  BC1_STATUS_INVALID_ARGUMENT = 2,
  BC1_STATUS_INVALID_MULTIPLICITY = 3,
  BC1_STATUS_NOT_INVARIANT = 4,
  BC1_STATUS_NON_DIVISIBLE = 5,
  BC1_STATUS_DEGENERATE = 6,
  BC1_STATUS_DOMAIN = 7,
  BC1_STATUS_MODE = 8,
  BC1_STATUS_DECOMPOSITION_MISMATCH = 9,
  /**
   * A verification ran and at least one identity failed.
   */
  BC1_STATUS_IDENTITY_FAILED = 10,
  BC1_STATUS_PANIC = 11,
} Bc1Status;

/**
 * Gram–Schmidt cache of `E(n, k)` for one multiplicity.
 */
typedef struct Bc1Family Bc1Family;

/**
 * A Laurent polynomial in `z` with rational coefficients.
 */
typedef struct Bc1Laurent Bc1Laurent;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a successful call.
 * The pointer stays valid until the next call into this library on the same thread.
 */
const char *bc1_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *bc1_version(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library that has not been freed.
 */
void bc1_string_free(char *s);

/**
 * Creates the `E(n, k)` family for nonnegative integer `k = (k1, k2)`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum Bc1Status bc1_family_new(int64_t k1, int64_t k2, struct Bc1Family **out);

/**
 * # Safety
 * `family` must be null or a handle from `bc1_family_new` that has not been freed.
 */
void bc1_family_free(struct Bc1Family *family);

/**
 * `E(n, k)` as a new polynomial handle.
 *
 * # Safety
 * `family` must be a live handle and `out` a valid pointer.
 */
enum Bc1Status bc1_family_e(struct Bc1Family *family, int64_t n, struct Bc1Laurent **out);

/**
 * Checks `D_k E(n,k) = λ_n E(n,k)`; `holds` receives the verdict.
 *
 * # Safety
 * `family` must be a live handle and `holds` a valid pointer.
 */
enum Bc1Status bc1_family_eigen_check(struct Bc1Family *family, int64_t n, bool *holds);

/**
 * A new zero polynomial.
 */
struct Bc1Laurent *bc1_laurent_new(void);

/**
 * # Safety
 * `p` must be null or a live polynomial handle.
 */
void bc1_laurent_free(struct Bc1Laurent *p);

/**
 * Adds `(num/den) z^exp`.
 *
 * # Safety
 * `p` must be a live polynomial handle.
 */
enum Bc1Status bc1_laurent_add_term(struct Bc1Laurent *p, int64_t exp, int64_t num, int64_t den);

/**
 * Number of nonzero terms.
 *
 * # Safety
 * `p` must be null or a live polynomial handle.
 */
size_t bc1_laurent_len(const struct Bc1Laurent *p);

/**
 * Term `index` in increasing exponent order: its exponent and its coefficient as a
 * `"p/q"` string owned by the caller.
 *
 * # Safety
 * `p` must be a live handle; `exp` and `coeff` valid pointers.
 */
enum Bc1Status bc1_laurent_term(const struct Bc1Laurent *p,
                                size_t index,
                                int64_t *exp,
                                char **coeff);

/**
 * Human-readable form, e.g. `3/5*z + 2/5 + z^-1`. Caller frees.
 *
 * # Safety
 * `p` must be null or a live polynomial handle.
 */
char *bc1_laurent_to_string(const struct Bc1Laurent *p);

/**
 * Value at a real point.
 *
 * # Safety
 * `p` must be null or a live polynomial handle.
 */
double bc1_laurent_eval(const struct Bc1Laurent *p, double z);

/**
 * `D_k p` for integer `k`.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum Bc1Status bc1_cherednik_apply(int64_t k1,
                                   int64_t k2,
                                   const struct Bc1Laurent *p,
                                   struct Bc1Laurent **out);

/**
 * Exact pairing `(p, q)_k` as a `"p/q"` string owned by the caller.
 *
 * # Safety
 * `p`, `q` must be live handles and `out` a valid pointer.
 */
enum Bc1Status bc1_ct_pair(int64_t k1,
                           int64_t k2,
                           const struct Bc1Laurent *p,
                           const struct Bc1Laurent *q,
                           char **out);

/**
 * Coefficient record as JSON for `family` in `E`, `P` (index `n`) or `M`, `monic`
 * (index `N >= 0`). Caller frees the string.
 *
 * # Safety
 * `family` must be a NUL-terminated string and `out` a valid pointer.
 */
enum Bc1Status bc1_compute_json(const char *family,
                                int64_t k1,
                                int64_t k2,
                                int64_t index,
                                char **out);

/**
 * Runs a verification suite (`eigen`, `ortho`, `matrix`, `shift`, `transmute`,
 * `spherical` or `all`) with default parameters at `k = (k1, k2)`. Returns
 * `IdentityFailed` when any check fails; `passed` and `total` receive the counts.
 *
 * # Safety
 * `suite` must be a NUL-terminated string; `passed` and `total` valid pointers.
 */
enum Bc1Status bc1_verify(const char *suite, int64_t k1, int64_t k2, size_t *passed, size_t *total);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BC1_JACOBI_H */
