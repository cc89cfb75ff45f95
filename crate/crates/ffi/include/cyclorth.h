#ifndef CYCLORTH_H
#define CYCLORTH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Algorithm selector for `cy_phi`.
 */
typedef enum CyAlgorithm {
  CyAlgorithm_Auto = 0,
  CyAlgorithm_Cascade = 1,
  CyAlgorithm_Mobius = 2,
  CyAlgorithm_Radical = 3,
} CyAlgorithm;

/**
 * Status codes returned by every fallible call.
 */
typedef enum CyStatus {
  CyStatus_Ok = 0,
  /**
   * A required pointer argument was null.
   */
  CyStatus_NullPointer = 1,
  /**
   * Argument outside the domain (n = 0, bad enum value, bad UTF-8 path).
   */
  CyStatus_InvalidArgument = 2,
  /**
   * d does not divide n.
   */
  CyStatus_NotADivisor = 3,
  /**
   * Internal arithmetic failure (inexact division, cache corruption, IO).
   */
  CyStatus_ArithmeticError = 4,
  /**
   * A panic was caught at the boundary.
   */
  CyStatus_Panic = 5,
} CyStatus;

/**
 * Opaque handle to a Phi cache (in-memory, optionally file-backed).
 */
typedef struct CyCache CyCache;

/**
 * Opaque handle to a polynomial with integer coefficients.
 */
typedef struct CyPoly CyPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Version string of the underlying library, static NUL-terminated ASCII.
 */
const char *cy_version(void);

/**
 * Create an in-memory cache.
 */
struct CyCache *cy_cache_new(void);

/**
 * Open a file-backed cache at `path` (created on first save).
 *
 * # Safety
 * `path` must be a valid NUL-terminated string; `out` must be valid.
 */
enum CyStatus cy_cache_open(const char *path, struct CyCache **out);

/**
 * Persist a file-backed cache. No-op for in-memory caches.
 *
 * # Safety
 * `cache` must come from `cy_cache_new`/`cy_cache_open`.
 */
enum CyStatus cy_cache_save(const struct CyCache *cache);

/**
 * Release a cache handle.
 *
 * # Safety
 * `cache` must come from `cy_cache_new`/`cy_cache_open`; not used after.
 */
void cy_cache_free(struct CyCache *cache);

/**
 * Compute the n-th cyclotomic polynomial.
 *
 * # Safety
 * `cache` and `out` must be valid pointers.
 */
enum CyStatus cy_phi(const struct CyCache *cache,
                     uint64_t n,
                     enum CyAlgorithm algorithm,
                     struct CyPoly **out);

/**
 * Compute the n-th inverse cyclotomic polynomial.
 *
 * # Safety
 * `cache` and `out` must be valid pointers.
 */
enum CyStatus cy_psi(const struct CyCache *cache, uint64_t n, struct CyPoly **out);

/**
 * Compute the cofactor (X^n - 1)/Phi_d for d | n.
 *
 * # Safety
 * `cache` and `out` must be valid pointers.
 */
enum CyStatus cy_psi_nd(const struct CyCache *cache, uint64_t n, uint64_t d, struct CyPoly **out);

/**
 * Release a polynomial handle.
 *
 * # Safety
 * `poly` must come from a `cy_*` compute call; not used after.
 */
void cy_poly_free(struct CyPoly *poly);

/**
 * Degree of the polynomial, or -1 for the zero polynomial.
 *
 * # Safety
 * `poly` must be a valid handle.
 */
int64_t cy_poly_degree(const struct CyPoly *poly);

/**
 * Number of stored coefficients (degree + 1, or 0 for zero).
 *
 * # Safety
 * `poly` must be a valid handle.
 */
uint64_t cy_poly_coeff_count(const struct CyPoly *poly);

/**
 * Write the coefficient of X^k as a NUL-terminated decimal string into
 * `buf`. Returns the required buffer size including the NUL, or 0 on a
 * null handle. If the buffer is too small nothing is written.
 *
 * # Safety
 * `buf` must point to at least `buf_len` writable bytes (or be null when
 * `buf_len` is 0, to query the size).
 */
uint64_t cy_poly_coeff_decimal(const struct CyPoly *poly, uint64_t k, char *buf, uint64_t buf_len);

/**
 * Exhaustively verify the shifted-cofactor orthogonality relation for n.
 * `out_pass` receives whether every inner product vanished, `out_checks`
 * the number of inner products examined.
 *
 * # Safety
 * All pointers must be valid.
 */
enum CyStatus cy_verify_theorem(const struct CyCache *cache,
                                uint64_t n,
                                bool *out_pass,
                                uint64_t *out_checks);

/**
 * Check the component-orthogonality lemma for one divisor pair d1 != d2.
 *
 * # Safety
 * All pointers must be valid.
 */
enum CyStatus cy_verify_lemma(const struct CyCache *cache,
                              uint64_t n,
                              uint64_t d1,
                              uint64_t d2,
                              bool *out_pass);

/**
 * Euler totient, written through `out`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum CyStatus cy_totient(uint64_t n, uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CYCLORTH_H */
