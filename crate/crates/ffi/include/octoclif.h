#ifndef OCTOCLIF_H
#define OCTOCLIF_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every exported function.
 */
typedef enum OcStatus {
  OC_STATUS_OK = 0,
  OC_STATUS_NULL_POINTER = 1,
  OC_STATUS_INVALID_ARGUMENT = 2,
  OC_STATUS_DIMENSION_MISMATCH = 3,
  OC_STATUS_SINGULAR = 4,
  OC_STATUS_POLE = 5,
  OC_STATUS_CONFIG = 6,
  OC_STATUS_NOT_FOUND = 7,
  OC_STATUS_INTERNAL = 8,
  OC_STATUS_PANIC = 9,
} OcStatus;

/**
 * Opaque map under test (catalog or config-built).
 */
typedef struct OcMap OcMap;

/**
 * Opaque multivector in `Cl_n`.
 */
typedef struct OcMultivector OcMultivector;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failing call on this thread, or null if none.
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *oc_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *oc_version(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed already.
 */
void oc_string_free(char *s);

/**
 * `out = a b` for octonions given as 8 coefficients `(1, e1, ..., e7)`.
 *
 * # Safety
 * `a`, `b` and `out` must each point to 8 doubles.
 */
enum OcStatus oc_octonion_mul(const double *a, const double *b, double *out);

/**
 * `out = a^-1`. Fails with `OC_STATUS_SINGULAR` when `a` is zero.
 *
 * # Safety
 * `a` and `out` must each point to 8 doubles.
 */
enum OcStatus oc_octonion_inverse(const double *a, double *out);

/**
 * Product in the Cayley-Dickson algebra of the given doubling level
 * (`len` must equal `2^level`).
 *
 * # Safety
 * `a`, `b` and `out` must each point to `len` doubles.
 */
enum OcStatus oc_cayley_dickson_mul(uint32_t level,
                                    const double *a,
                                    const double *b,
                                    double *out,
                                    size_t len);

/**
 * Creates a multivector of `Cl_n` from `len = 2^n` blade coefficients,
 * indexed by generator bitmask.
 *
 * # Safety
 * `coeffs` must point to `len` doubles; `out` must be writable.
 */
enum OcStatus oc_multivector_new(size_t n,
                                 const double *coeffs,
                                 size_t len,
                                 struct OcMultivector **out);

/**
 * Releases a multivector. Null is ignored.
 *
 * # Safety
 * `mv` must come from this library and not have been freed already.
 */
void oc_multivector_free(struct OcMultivector *mv);

/**
 * Number of coefficients (`2^n`).
 *
 * # Safety
 * `mv` must be a live handle; `out_len` must be writable.
 */
enum OcStatus oc_multivector_len(const struct OcMultivector *mv, size_t *out_len);

/**
 * Copies the coefficients into `out` (`len` must equal `2^n`).
 *
 * # Safety
 * `mv` must be a live handle; `out` must point to `len` doubles.
 */
enum OcStatus oc_multivector_coeffs(const struct OcMultivector *mv, double *out, size_t len);

/**
 * Geometric product `a b` as a new handle.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum OcStatus oc_multivector_product(const struct OcMultivector *a,
                                     const struct OcMultivector *b,
                                     struct OcMultivector **out);

/**
 * Clifford conjugate as a new handle.
 *
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum OcStatus oc_multivector_conjugate(const struct OcMultivector *a, struct OcMultivector **out);

/**
 * Reversion as a new handle.
 *
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum OcStatus oc_multivector_reversion(const struct OcMultivector *a, struct OcMultivector **out);

/**
 * Builds a catalog map. `n` is the generator count for Clifford maps
 * (0 selects the default); it is ignored for octonion maps.
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum OcStatus oc_map_from_catalog(const char *name, size_t n, struct OcMap **out);

/**
 * Builds a map from a JSON description (one object or an array). With an
 * array, `name` selects the entry; `name` may be null for a single map.
 *
 * # Safety
 * `json` must be a NUL-terminated string, `name` null or NUL-terminated;
 * `out` must be writable.
 */
enum OcStatus oc_map_from_config(const char *json, const char *name, struct OcMap **out);

/**
 * Releases a map. Null is ignored.
 *
 * # Safety
 * `map` must come from this library and not have been freed already.
 */
void oc_map_free(struct OcMap *map);

/**
 * Number of real coordinates of a domain point (8 for octonion maps,
 * `n + 1` for paravector maps).
 *
 * # Safety
 * `map` must be a live handle; `out_dim` must be writable.
 */
enum OcStatus oc_map_dim(const struct OcMap *map, size_t *out_dim);

/**
 * Evaluates the map at `z` (`len` = dimension); writes `len` coordinates.
 *
 * # Safety
 * `map` must be a live handle; `z` and `out` must point to `len` doubles.
 */
enum OcStatus oc_map_eval(const struct OcMap *map, const double *z, size_t len, double *out);

/**
 * Runs the conformality analysis on `samples` points of the default box
 * and returns the JSON report in `*out_json` (free with `oc_string_free`).
 * `directions` random directions are used for the differential identity.
 *
 * # Safety
 * `map` must be a live handle; `out_json` must be writable.
 */
enum OcStatus oc_map_analyze(const struct OcMap *map,
                             size_t samples,
                             uint64_t seed,
                             size_t directions,
                             char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* OCTOCLIF_H */
