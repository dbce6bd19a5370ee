#ifndef G2D5_H
#define G2D5_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum G2d5Case {
  G2D5_CASE_NON_DEGENERATE = 0,
  G2D5_CASE_I = 1,
  G2D5_CASE_II = 2,
  G2D5_CASE_III = 3,
} G2d5Case;

// Return codes. Values 1 to 14 mirror the library's domain errors.
typedef enum G2d5Status {
  G2D5_STATUS_OK = 0,
  G2D5_STATUS_INVALID_INPUT = 1,
  G2D5_STATUS_EXCLUDED_PARAMETER = 2,
  G2D5_STATUS_DEGENERATE_QUADRATIC = 3,
  G2D5_STATUS_INVALID_ROOT = 4,
  G2D5_STATUS_CONSTRUCTION_FAILURE = 5,
  G2D5_STATUS_SINGULAR_MODEL = 6,
  G2D5_STATUS_DEGENERATE_SUBCOVER = 7,
  G2D5_STATUS_J2_ZERO = 8,
  G2D5_STATUS_PRECISION = 9,
  G2D5_STATUS_NOT_ON_LOCUS = 10,
  G2D5_STATUS_AMBIGUOUS = 11,
  G2D5_STATUS_IDENTITY_VIOLATION = 12,
  G2D5_STATUS_CONTEXT_MISMATCH = 13,
  G2D5_STATUS_PARSE_ERROR = 14,
  G2D5_STATUS_NULL_POINTER = 100,
  G2D5_STATUS_INVALID_UTF8 = 101,
  G2D5_STATUS_PANIC = 102,
} G2d5Status;

// A degree-5 cover built from admissible `(a, b)`.
typedef struct G2d5Cover G2d5Cover;

// A genus-2 curve `y² = f(x)`.
typedef struct G2d5Curve G2d5Curve;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread; empty after a success.
// The pointer stays valid until the next call into the library.
const char *g2d5_last_error(void);

// Stable kebab-case name of a status code. Static storage.
const char *g2d5_status_name(enum G2d5Status status);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void g2d5_string_free(char *s);

// Builds the cover at `(a, b)`.
//
// # Safety
// `a` and `b` must be nul-terminated strings; `out` must be writable.
enum G2d5Status g2d5_cover_new(const char *a, const char *b, struct G2d5Cover **out);

// # Safety
// `cover` must come from [`g2d5_cover_new`] and not have been freed.
void g2d5_cover_free(struct G2d5Cover *cover);

// # Safety
// `cover` must be a live handle; `out` must be writable.
enum G2d5Status g2d5_cover_case(const struct G2d5Cover *cover, enum G2d5Case *out);

// `{a, b, F1..F4, phi_num, phi_den, case}` as JSON.
//
// # Safety
// `cover` must be a live handle; `out` must be writable.
enum G2d5Status g2d5_cover_json(const struct G2d5Cover *cover, char **out);

// The curve at root `index` (0 or 1) of `F4`.
//
// # Safety
// `cover` must be a live handle; `out` must be writable.
enum G2d5Status g2d5_curve_from_cover(const struct G2d5Cover *cover,
                                      uint32_t index,
                                      struct G2d5Curve **out);

// `y² = Σ coeffs[i] xⁱ` from `n` rational strings, `n` in 6..=7.
//
// # Safety
// `coeffs` must point to `n` nul-terminated strings; `out` must be writable.
enum G2d5Status g2d5_curve_from_coeffs(const char *const *coeffs, size_t n, struct G2d5Curve **out);

// # Safety
// `curve` must come from this library and not have been freed.
void g2d5_curve_free(struct G2d5Curve *curve);

// `{degree, coeffs, field}` as JSON.
//
// # Safety
// `curve` must be a live handle; `out` must be writable.
enum G2d5Status g2d5_curve_json(const struct G2d5Curve *curve, char **out);

// `{J2, J4, J6, J10, i1, i2, i3}` as JSON; the `i` keys are absent when J2 = 0.
//
// # Safety
// `curve` must be a live handle; `out` must be writable.
enum G2d5Status g2d5_curve_invariants(const struct G2d5Curve *curve, char **out);

// Order of the reduced automorphism group found numerically, within `tol`.
//
// # Safety
// `curve` must be a live handle; `order` must be writable.
enum G2d5Status g2d5_curve_reduced_aut_order(const struct G2d5Curve *curve,
                                             size_t precision_bits,
                                             double tol,
                                             size_t *order);

// `(i1, i2, i3)` on the case I or II locus at `T`, as JSON.
//
// # Safety
// `t` must be a nul-terminated string; `out` must be writable.
enum G2d5Status g2d5_locus_formulas(enum G2d5Case case_, const char *t, char **out);

// Recovers `T` from rational absolute invariants on the case I or II locus.
//
// # Safety
// `i1`, `i2`, `i3` must be nul-terminated strings; `out` must be writable.
enum G2d5Status g2d5_recover_parameter(enum G2d5Case case_,
                                       const char *i1,
                                       const char *i2,
                                       const char *i3,
                                       char **out);

// Nielsen class count for `group` ("S5" or "A5") and comma-separated
// cycle `types`.
//
// # Safety
// `group` and `types` must be nul-terminated strings; `classes` writable.
enum G2d5Status g2d5_nielsen_count(const char *group, const char *types, uint64_t *classes);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* G2D5_H */
