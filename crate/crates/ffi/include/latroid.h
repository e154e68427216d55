#ifndef LATROID_H
#define LATROID_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum LatStatus {
  LAT_STATUS_OK = 0,
  /**
   * A check ran and failed (axiom violated, identity does not hold).
   */
  LAT_STATUS_VALIDATION_FAILED = 1,
  LAT_STATUS_INPUT_ERROR = 2,
  LAT_STATUS_CAP_EXCEEDED = 3,
  LAT_STATUS_NULL_POINTER = 4,
  LAT_STATUS_PANIC = 5,
} LatStatus;

/**
 * A linear code over a finite principal ideal ring.
 */
typedef struct LatCode LatCode;

/**
 * A latroid on an explicit finite lattice.
 */
typedef struct LatLatroid LatLatroid;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer is
 * valid until the next call into this library on the same thread.
 */
const char *lat_last_error(void);

/**
 * Library version as a static string.
 */
const char *lat_version(void);

/**
 * Frees a string returned by this library.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void lat_string_free(char *s);

/**
 * Builds the code spanned by `num_gens` rows of `n` integers (row-major in
 * `gens`) over the ring named by `ring`, e.g. `"Z_4"` or `"Z_6"`.
 *
 * # Safety
 * `ring` must be a C string, `gens` must hold `num_gens * n` values and
 * `out` must be writable.
 */
enum LatStatus lat_code_new(const char *ring,
                            size_t n,
                            const int64_t *gens,
                            size_t num_gens,
                            struct LatCode **out);

/**
 * Builds the code described by a config text (`ring`, `n`, `gen` lines).
 *
 * # Safety
 * `config` must be a C string and `out` writable.
 */
enum LatStatus lat_code_from_config(const char *config, struct LatCode **out);

/**
 * # Safety
 * `code` must come from this library and not be freed twice.
 */
void lat_code_free(struct LatCode *code);

/**
 * Number of codewords.
 *
 * # Safety
 * `code` must be a live handle and `out` writable.
 */
enum LatStatus lat_code_size(const struct LatCode *code, uint64_t *out);

/**
 * Generalized weights `d̄_1, ..., d̄_lambda` for the chain support. The
 * count is always stored in `len`; the call fails when it exceeds `cap`.
 *
 * # Safety
 * `code` must be a live handle, `buf` must hold `cap` values and `len`
 * must be writable.
 */
enum LatStatus lat_code_dbar(const struct LatCode *code, uint32_t *buf, size_t cap, size_t *len);

/**
 * Generalized weights `d_1, ..., d_mu` for the chain support.
 *
 * # Safety
 * As for [`lat_code_dbar`].
 */
enum LatStatus lat_code_dr(const struct LatCode *code, uint32_t *buf, size_t cap, size_t *len);

/**
 * Homogeneous weight enumerator for the chain support, as text. Free the
 * result with [`lat_string_free`].
 *
 * # Safety
 * `code` must be a live handle and `out` writable.
 */
enum LatStatus lat_code_enumerator(const struct LatCode *code, char **out);

/**
 * Checks that the enumerator recovered from the Tutte-Whitney polynomial
 * equals the refined enumerator; `ValidationFailed` otherwise.
 *
 * # Safety
 * `code` must be a live handle.
 */
enum LatStatus lat_code_tutte_identity(const struct LatCode *code);

/**
 * The chain support latroid of a code.
 *
 * # Safety
 * `code` must be a live handle and `out` writable.
 */
enum LatStatus lat_code_chain_latroid(const struct LatCode *code, struct LatLatroid **out);

/**
 * # Safety
 * `lt` must come from this library and not be freed twice.
 */
void lat_latroid_free(struct LatLatroid *lt);

/**
 * Number of lattice elements.
 *
 * # Safety
 * `lt` must be a live handle and `out` writable.
 */
enum LatStatus lat_latroid_size(const struct LatLatroid *lt, size_t *out);

/**
 * Rank of element `index`, summed over its coordinates; fails for
 * non-integral ranks.
 *
 * # Safety
 * `lt` must be a live handle and `out` writable.
 */
enum LatStatus lat_latroid_rank(const struct LatLatroid *lt, size_t index, int64_t *out);

/**
 * Checks L1-L5; `ValidationFailed` with the failing rule otherwise.
 *
 * # Safety
 * `lt` must be a live handle.
 */
enum LatStatus lat_latroid_validate(const struct LatLatroid *lt);

/**
 * Rank to independents, bases and circuits and back.
 *
 * # Safety
 * `lt` must be a live handle.
 */
enum LatStatus lat_latroid_crypto_roundtrip(const struct LatLatroid *lt);

/**
 * Runs a command of the command line front-end on a config text and stores
 * the JSON report in `out` (free with [`lat_string_free`]). A report whose
 * checks failed is still stored and gives `ValidationFailed`.
 *
 * # Safety
 * `config` and `command` must be C strings and `out` writable.
 */
enum LatStatus lat_run_command(const char *config,
                               const char *command,
                               uint64_t seed,
                               uint64_t cap,
                               char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LATROID_H */
