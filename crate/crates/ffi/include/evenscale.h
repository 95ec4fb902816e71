#ifndef EVENSCALE_H
#define EVENSCALE_H

/* This file is generated by cbindgen from evenscale-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Type tag of a maximally even class.
 */
typedef enum EsScaleKind {
  EsScaleKind_I = 0,
  EsScaleKind_IIa,
  EsScaleKind_IIb,
  EsScaleKind_III,
  EsScaleKind_Degenerate,
} EsScaleKind;

/**
 * Result code for every fallible call.
 */
typedef enum EsStatus {
  EsStatus_Ok = 0,
  /**
   * A required pointer argument was NULL.
   */
  EsStatus_NullPointer,
  /**
   * An argument violated a precondition (range, cardinality, coprimality).
   */
  EsStatus_InvalidArgument,
  /**
   * A set literal or rational offset failed to parse.
   */
  EsStatus_ParseError,
  /**
   * The operation is undefined for this input (e.g. period of the empty set).
   */
  EsStatus_Undefined,
  /**
   * The requested enumeration exceeds the configured budget.
   */
  EsStatus_TooLarge,
  /**
   * The input set is not maximally even.
   */
  EsStatus_NotMaximallyEven,
  /**
   * The modulus is outside the theorem's scope.
   */
  EsStatus_OutOfScope,
  /**
   * The output buffer is too small.
   */
  EsStatus_BufferTooSmall,
  /**
   * Internal invariant failure.
   */
  EsStatus_Internal,
} EsStatus;

/**
 * Opaque pitch-class set handle.
 */
typedef struct EsSet EsSet;

/**
 * Classification record for the maximally even class of `(c, d)`.
 */
typedef struct EsClassification {
  enum EsScaleKind kind;
  /**
   * `gcd(c, d)`.
   */
  uint32_t m;
  uint32_t c_prime;
  uint32_t d_prime;
  /**
   * `d^{-1} mod c` for type I, otherwise -1.
   */
  int64_t generator;
  /**
   * Period of the class: `c / m`.
   */
  uint32_t period;
} EsClassification;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a set literal `c:d:{a1,a2,...}` into a new handle.
 *
 * # Safety
 * `text` must point to a NUL-terminated string; `out` must be a valid
 * pointer to receive the handle.
 */
enum EsStatus es_set_parse(const char *text, struct EsSet **out);

/**
 * Builds a set from `len` members in `0..modulus`. `members` may be NULL
 * when `len` is 0.
 *
 * # Safety
 * `members` must point to `len` readable `uint32_t`s when `len > 0`.
 */
enum EsStatus es_set_new(uint32_t modulus, const uint32_t *members, size_t len, struct EsSet **out);

/**
 * Releases a handle returned by any constructor here. NULL is a no-op.
 *
 * # Safety
 * `set` must be a handle from this library that has not been freed.
 */
void es_set_free(struct EsSet *set);

/**
 * Frees a string returned by this library. NULL is a no-op.
 *
 * # Safety
 * `text` must be a string from this library that has not been freed.
 */
void es_string_free(char *text);

/**
 * The modulus `c`, or 0 for a NULL handle.
 * # Safety
 * `set` must be NULL or a live handle from this library.
 */
uint32_t es_set_modulus(const struct EsSet *set);

/**
 * The cardinality `|A|`, or 0 for a NULL handle.
 * # Safety
 * `set` must be NULL or a live handle from this library.
 */
uint32_t es_set_cardinality(const struct EsSet *set);

/**
 * Copies the members (ascending) into `buf`.
 *
 * # Safety
 * `buf` must have room for `len` values, with `len >= cardinality`.
 */
enum EsStatus es_set_members(const struct EsSet *set, uint32_t *buf, size_t len);

/**
 * The set literal `c:d:{a1,...}` as a newly allocated string, or NULL.
 * # Safety
 * `set` must be NULL or a live handle from this library.
 */
char *es_set_format(const struct EsSet *set);

/**
 * `A + shift (mod c)` as a new handle.
 * # Safety
 * `set` must be a live handle; `out` must be a valid pointer.
 */
enum EsStatus es_set_translate(const struct EsSet *set, int64_t shift, struct EsSet **out);

/**
 * `-A (mod c)` as a new handle.
 * # Safety
 * `set` must be a live handle; `out` must be a valid pointer.
 */
enum EsStatus es_set_invert(const struct EsSet *set, struct EsSet **out);

/**
 * `Z_c \ A` as a new handle.
 * # Safety
 * `set` must be a live handle; `out` must be a valid pointer.
 */
enum EsStatus es_set_complement(const struct EsSet *set, struct EsSet **out);

/**
 * Smallest `t > 0` with `A + t = A`; `EsStatus::Undefined` for the empty set.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum EsStatus es_set_period(const struct EsSet *set, uint32_t *out);

/**
 * Canonical (lexicographically least) representative of the translation
 * orbit, optionally folding in inversion; also reports the orbit size.
 *
 * # Safety
 * `out_set` and `out_orbit_size` must be valid pointers.
 */
enum EsStatus es_set_canonical(const struct EsSet *set,
                               bool include_inversion,
                               struct EsSet **out_set,
                               uint32_t *out_orbit_size);

/**
 * Writes the `c` magnitudes `|F_A(0)|..|F_A(c-1)|` into `buf`.
 *
 * # Safety
 * `buf` must have room for `len` doubles, with `len >= c`.
 */
enum EsStatus es_set_dft_magnitudes(const struct EsSet *set, double *buf, size_t len);

/**
 * Writes the `c` interval-content counts `IC_A(0)..IC_A(c-1)` into `buf`.
 *
 * # Safety
 * `buf` must have room for `len` values, with `len >= c`.
 */
enum EsStatus es_set_interval_content(const struct EsSet *set, uint64_t *buf, size_t len);

/**
 * Whether `|F_A(d)|` attains the proven maximum for its cardinality.
 * Requires `0 < |A| < c`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum EsStatus es_set_is_maximally_even(const struct EsSet *set, bool *out);

/**
 * The maximally even set of `(c, d)` from the floor generator with the
 * rational offset `alpha_numer/alpha_denom`.
 * # Safety
 * `out` must be a valid pointer.
 */
enum EsStatus es_me_formula(uint32_t modulus,
                            uint32_t cardinality,
                            int64_t alpha_numer,
                            int64_t alpha_denom,
                            struct EsSet **out);

/**
 * Number of distinct maximally even sets of `(c, d)`: `c / gcd(c, d)`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum EsStatus es_me_class_count(uint32_t modulus, uint32_t cardinality, uint32_t *out);

/**
 * Classifies the `(c, d)` maximally even class. Requires `0 < d < c`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum EsStatus es_classify(uint32_t modulus, uint32_t cardinality, struct EsClassification *out);

/**
 * The reduced maximally even set of `Z_{c'}` for the `(c, d)` class, or a
 * NULL handle when `gcd(c, d) = 1` (type I has no reduction).
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum EsStatus es_classify_reduced(uint32_t modulus, uint32_t cardinality, struct EsSet **out);

/**
 * Smallest type III cardinality for this modulus, or -1 when none exists.
 * Requires `c >= 2`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum EsStatus es_type_iii_search(uint32_t modulus, int64_t *out);

/**
 * Constructive type III witness for composite `c > 12`: the divisor `k`,
 * prime `p`, witness cardinality, and the witness set itself.
 *
 * # Safety
 * All out-pointers must be valid.
 */
enum EsStatus es_lemma_witness(uint32_t modulus,
                               uint32_t *out_k,
                               uint32_t *out_p,
                               uint32_t *out_cardinality,
                               struct EsSet **out_witness);

/**
 * Exhaustive generator search (smallest `f >= 1` generating the set), or
 * -1 when the set is not a generated scale.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum EsStatus es_set_find_generator(const struct EsSet *set, int64_t *out);

/**
 * Sum of circular distances over ordered pairs.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum EsStatus es_set_angular_sum(const struct EsSet *set, uint64_t *out);

/**
 * Sum of unit-circle chord lengths over ordered pairs.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum EsStatus es_set_euclidean_sum(const struct EsSet *set, double *out);

/**
 * Full analysis of the set as a JSON document (same schema as the CLI's
 * `analyze --format json`), or NULL on failure.
 * # Safety
 * `set` must be NULL or a live handle from this library.
 */
char *es_set_analyze_json(const struct EsSet *set);

/**
 * Standalone SVG rendering of the set as an inscribed polygon, or NULL.
 * # Safety
 * `set` must be NULL or a live handle from this library.
 */
char *es_set_svg(const struct EsSet *set, bool labels);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* EVENSCALE_H */
