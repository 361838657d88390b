#ifndef POLYINT_H
#define POLYINT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stddef.h>
#include <stdint.h>

/*
 Result codes. Zero means success.
 */
typedef enum {
  POLYINT_STATUS_OK = 0,
  POLYINT_STATUS_NULL_POINTER = 1,
  POLYINT_STATUS_INVALID_UTF8 = 2,
  /*
   Malformed JSON, expression, rational literal or method name.
   */
  POLYINT_STATUS_INVALID_INPUT = 3,
  POLYINT_STATUS_DIMENSION_MISMATCH = 4,
  POLYINT_STATUS_DEGENERATE_SIMPLEX = 5,
  /*
   A configured cap or enumeration limit was exceeded.
   */
  POLYINT_STATUS_LIMIT_EXCEEDED = 6,
  /*
   The chosen method does not apply to this input.
   */
  POLYINT_STATUS_UNSUPPORTED = 7,
  /*
   A Rust panic was caught at the boundary.
   */
  POLYINT_STATUS_INTERNAL = 8,
} PolyintStatus;

/*
 Opaque polynomial handle.
 */
typedef struct PolyintPolynomial PolyintPolynomial;

/*
 Opaque simplex handle.
 */
typedef struct PolyintSimplex PolyintSimplex;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message of the most recent failure on this thread, or an empty string.
 The pointer stays valid until the next failing call on this thread.
 */
const char *polyint_last_error_message(void);

/*
 Release a string returned by this library. Null is ignored.

 # Safety
 `text` must be null or a string returned by this library and not yet freed.
 */
void polyint_string_free(char *text);

/*
 Build a simplex from a JSON vertex list such as `[[0,0],[1,0],[0,1]]`.
 Coordinates may be integers or rational strings.

 # Safety
 `vertices_json` must be a NUL-terminated string; `out` must be writable.
 */
PolyintStatus polyint_simplex_new_json(const char *vertices_json, PolyintSimplex **out);

/*
 # Safety
 `simplex` must be null or a handle from this library, not yet freed.
 */
void polyint_simplex_free(PolyintSimplex *simplex);

/*
 Dimension of the simplex, or 0 for a null handle.

 # Safety
 `simplex` must be null or a live handle.
 */
uintptr_t polyint_simplex_dimension(const PolyintSimplex *simplex);

/*
 Volume under the integral Lebesgue measure of the simplex's affine hull.

 # Safety
 `simplex` must be a live handle; `out` must be writable.
 */
PolyintStatus polyint_simplex_volume(const PolyintSimplex *simplex, char **out);

/*
 Parse a fully parenthesized expression in `x1..x{variable_count}`.

 # Safety
 `expression` must be a NUL-terminated string; `out` must be writable.
 */
PolyintStatus polyint_polynomial_new_expression(const char *expression,
                                                uintptr_t variable_count,
                                                PolyintPolynomial **out);

/*
 Parse a sparse term list `[{"coef":"3/2","exps":[2,1]}, ...]`.

 # Safety
 `terms_json` must be a NUL-terminated string; `out` must be writable.
 */
PolyintStatus polyint_polynomial_new_sparse_json(const char *terms_json,
                                                 uintptr_t variable_count,
                                                 PolyintPolynomial **out);

/*
 The power `(Σ c_i x_i)^exponent` with integer coefficients.

 # Safety
 `coefficients` must point to `variable_count` readable values; `out`
 must be writable.
 */
PolyintStatus polyint_polynomial_new_linear_power(const int64_t *coefficients,
                                                  uintptr_t variable_count,
                                                  uint32_t exponent,
                                                  PolyintPolynomial **out);

/*
 # Safety
 `polynomial` must be null or a handle from this library, not yet freed.
 */
void polyint_polynomial_free(PolyintPolynomial *polynomial);

/*
 Integrate a polynomial over a simplex. `method` is one of `auto`,
 `bigsum`, `brion-regular`, `residue`, `waring`, `duality`, `laurent`,
 `polarization`; null means `auto`. Writes the exact value to `out_value`
 and, if `out_method` is not null, the method actually used.

 # Safety
 Handles must be live; `method` null or NUL-terminated; `out_value`
 writable; `out_method` null or writable.
 */
PolyintStatus polyint_integrate(const PolyintSimplex *simplex,
                                const PolyintPolynomial *polynomial,
                                const char *method,
                                char **out_value,
                                char **out_method);

/*
 Run a JSON integration request, as accepted by the command line tool,
 and write the JSON result.

 # Safety
 `request_json` must be NUL-terminated; `out_json` must be writable.
 */
PolyintStatus polyint_integrate_request_json(const char *request_json, char **out_json);

/*
 Number of primitive linear forms in `n` variables needed by power
 decompositions of degree at most `max_degree`, as a decimal string.

 # Safety
 `out` must be writable.
 */
PolyintStatus polyint_count_primitive_forms(uint32_t n, uint32_t max_degree, char **out);

/*
 Library version as a static NUL-terminated string.
 */
const char *polyint_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POLYINT_H */
