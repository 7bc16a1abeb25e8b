#ifndef CIRCDET_H
#define CIRCDET_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CircdetStatus {
  CIRCDET_STATUS_OK = 0,
  CIRCDET_STATUS_NULL_POINTER = 1,
  CIRCDET_STATUS_INVALID_ARGUMENT = 2,
  CIRCDET_STATUS_OUT_OF_RANGE = 3,
  /**
   * The output buffer cannot hold the result; the required length was still reported.
   */
  CIRCDET_STATUS_BUFFER_TOO_SMALL = 4,
  /**
   * The value does not fit the requested integer type.
   */
  CIRCDET_STATUS_OVERFLOW = 5,
  CIRCDET_STATUS_INTERNAL = 6,
  CIRCDET_STATUS_PANIC = 7,
} CircdetStatus;

typedef enum CircdetStrategy {
  CIRCDET_STRATEGY_DIRECT = 0,
  CIRCDET_STRATEGY_REDUCED = 1,
} CircdetStrategy;

/**
 * Opaque handle to a computed expansion.
 */
typedef struct CircdetExpansion CircdetExpansion;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Coefficient of the monomial with the given `n` indices, each in `[0, n)`, as a decimal string.
 *
 * # Safety
 * `indices` points to `len` values. `buf` is null or writable for `buf_len` bytes.
 * `written` is null or writable.
 */
enum CircdetStatus circdet_coefficient(size_t n,
                                       const size_t *indices,
                                       size_t len,
                                       char *buf,
                                       size_t buf_len,
                                       size_t *written);

/**
 * Same as [`circdet_coefficient`] but into an `i64`; `Overflow` if it does not fit.
 *
 * # Safety
 * `indices` points to `len` values and `out` is writable.
 */
enum CircdetStatus circdet_coefficient_i64(size_t n,
                                           const size_t *indices,
                                           size_t len,
                                           int64_t *out);

/**
 * Whether the coefficient vanishes by the three-large-index criterion, up to symmetry.
 * A false result does not mean the coefficient is nonzero.
 *
 * # Safety
 * `indices` points to `len` values and `out` is writable.
 */
enum CircdetStatus circdet_is_structural_zero(size_t n,
                                              const size_t *indices,
                                              size_t len,
                                              bool *out);

/**
 * Number of admissible exponent vectors for dimension `n`.
 *
 * # Safety
 * `out` is writable.
 */
enum CircdetStatus circdet_count_solutions(size_t n, uint64_t *out);

/**
 * Expands the `n x n` determinant. Free the handle with [`circdet_expansion_free`].
 *
 * # Safety
 * `out` is writable. `strategy` must be a valid `CircdetStrategy`.
 */
enum CircdetStatus circdet_expansion_new(size_t n,
                                         enum CircdetStrategy strategy,
                                         struct CircdetExpansion **out);

/**
 * # Safety
 * `h` is null or a handle from [`circdet_expansion_new`] not yet freed.
 */
void circdet_expansion_free(struct CircdetExpansion *h);

/**
 * Dimension of the expansion, 0 for a null handle.
 *
 * # Safety
 * `h` is null or a live handle.
 */
size_t circdet_expansion_n(const struct CircdetExpansion *h);

/**
 * Number of nonzero terms, 0 for a null handle.
 *
 * # Safety
 * `h` is null or a live handle.
 */
size_t circdet_expansion_term_count(const struct CircdetExpansion *h);

/**
 * Term `i` in lexicographic order of exponent vectors. `m_out` receives the `n` exponents
 * and `buf` the coefficient as a decimal string.
 *
 * # Safety
 * `h` is a live handle, `m_out` is writable for `m_len` values, `buf` is null or
 * writable for `buf_len` bytes, `written` is null or writable.
 */
enum CircdetStatus circdet_expansion_term(const struct CircdetExpansion *h,
                                          size_t i,
                                          size_t *m_out,
                                          size_t m_len,
                                          char *buf,
                                          size_t buf_len,
                                          size_t *written);

/**
 * Determinant at integer arguments `x[0..n]`, as a decimal string.
 *
 * # Safety
 * `h` is a live handle, `x` points to `len` values, `buf`/`written` as for
 * [`circdet_coefficient`].
 */
enum CircdetStatus circdet_expansion_evaluate(const struct CircdetExpansion *h,
                                              const int64_t *x,
                                              size_t len,
                                              char *buf,
                                              size_t buf_len,
                                              size_t *written);

/**
 * JSON document of the nonzero terms. Free with [`circdet_string_free`]. Null on failure.
 *
 * # Safety
 * `h` is null or a live handle.
 */
char *circdet_expansion_to_json(const struct CircdetExpansion *h);

/**
 * # Safety
 * `s` is null or a string returned by this library and not yet freed.
 */
void circdet_string_free(char *s);

/**
 * Copies the calling thread's last error message into `buf`. Returns `Ok` with an empty
 * string when there is none.
 *
 * # Safety
 * `buf` is null or writable for `buf_len` bytes, `written` is null or writable.
 */
enum CircdetStatus circdet_last_error_message(char *buf, size_t buf_len, size_t *written);

/**
 * Library version, static storage.
 */
const char *circdet_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CIRCDET_H */
