/* matpoly: exact interpolation between matrices and bivariate polynomials.
 *
 * Conventions shared by every function here:
 *   - Handles are opaque; free them with the matching *_free function.
 *   - Functions returning matpoly_status write their result through the
 *     final out parameter only on MATPOLY_OK, and leave it untouched
 *     otherwise. On failure, matpoly_last_error() returns a message for the
 *     current thread until the next call on that thread.
 *   - Strings handed out through char** are heap copies owned by the
 *     caller; release them with matpoly_free_string.
 *   - Rational scalars cross the boundary as text: "123", "-4/7" or a
 *     finite decimal such as "3.25".
 */

#ifndef MATPOLY_H
#define MATPOLY_H

#include <stddef.h>
#include <stdint.h>

#ifndef MATPOLY_API
#define MATPOLY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum matpoly_status {
  MATPOLY_OK = 0,
  MATPOLY_ERR_FAIL = 1,     /* generic failure, including failed verification */
  MATPOLY_ERR_SHAPE = 2,    /* incompatible shapes */
  MATPOLY_ERR_SINGULAR = 3, /* matrix or polynomial not invertible */
  MATPOLY_ERR_PARSE = 4,    /* malformed textual input */
  MATPOLY_ERR_ARG = 5,      /* null handle or out-of-domain argument */
} matpoly_status;

typedef enum matpoly_method {
  MATPOLY_METHOD_LAGRANGE = 0,
  MATPOLY_METHOD_NEWTON_FORWARD = 1,
  MATPOLY_METHOD_NEWTON_BACKWARD = 2,
  MATPOLY_METHOD_LINEAR_SYSTEM = 3,
} matpoly_method;

typedef struct matpoly_matrix matpoly_matrix;
typedef struct matpoly_poly matpoly_poly;

MATPOLY_API const char* matpoly_version(void);

/* Message describing the most recent failure on the calling thread; empty
 * string when the last call succeeded. The pointer stays valid until the
 * next library call on the same thread. */
MATPOLY_API const char* matpoly_last_error(void);

MATPOLY_API void matpoly_free_string(char* s);

/* ---- matrices ------------------------------------------------------- */

/* CSV: one row per line, comma-separated rational literals. */
MATPOLY_API matpoly_status matpoly_matrix_parse_csv(const char* csv,
                                                    matpoly_matrix** out);
MATPOLY_API matpoly_status matpoly_matrix_identity(size_t n, matpoly_matrix** out);
MATPOLY_API void matpoly_matrix_free(matpoly_matrix* m);

/* Dimension queries return 0 on a null handle. */
MATPOLY_API size_t matpoly_matrix_rows(const matpoly_matrix* m);
MATPOLY_API size_t matpoly_matrix_cols(const matpoly_matrix* m);

/* Entry at 0-based (row, col) as a rational literal. */
MATPOLY_API matpoly_status matpoly_matrix_entry(const matpoly_matrix* m, size_t row,
                                                size_t col, char** out);
MATPOLY_API matpoly_status matpoly_matrix_to_csv(const matpoly_matrix* m, char** out);
MATPOLY_API matpoly_status matpoly_matrix_mul(const matpoly_matrix* a,
                                              const matpoly_matrix* b,
                                              matpoly_matrix** out);
MATPOLY_API matpoly_status matpoly_matrix_inverse(const matpoly_matrix* a,
                                                  matpoly_matrix** out);

/* ---- polynomials ---------------------------------------------------- */

/* JSON: {"m": 2, "n": 2, "coeffs": [["-18", "13"], ["14", "-10"]]} where
 * coeffs[k1][k2] multiplies x^k1*y^k2. */
MATPOLY_API matpoly_status matpoly_poly_parse_json(const char* text,
                                                   matpoly_poly** out);

/* Term grammar: "-10*x*y + 14*x + 13*y - 18". Pass m = n = 0 to infer the
 * minimal shape; otherwise the declared shape must contain every term. */
MATPOLY_API matpoly_status matpoly_poly_parse_text(const char* text, size_t m,
                                                   size_t n, matpoly_poly** out);
MATPOLY_API void matpoly_poly_free(matpoly_poly* p);

/* Declared shape: x-degree < xdim, y-degree < ydim. 0 on a null handle. */
MATPOLY_API size_t matpoly_poly_xdim(const matpoly_poly* p);
MATPOLY_API size_t matpoly_poly_ydim(const matpoly_poly* p);

MATPOLY_API matpoly_status matpoly_poly_coeff(const matpoly_poly* p, size_t k1,
                                              size_t k2, char** out);
MATPOLY_API matpoly_status matpoly_poly_to_text(const matpoly_poly* p, char** out);
MATPOLY_API matpoly_status matpoly_poly_to_json(const matpoly_poly* p, char** out);
MATPOLY_API matpoly_status matpoly_poly_eval(const matpoly_poly* p, const char* x,
                                             const char* y, char** out);

/* 1 when the two polynomials are equal as functions (declared shapes may
 * differ), 0 when not, -1 on a null handle. */
MATPOLY_API int matpoly_poly_equal(const matpoly_poly* a, const matpoly_poly* b);

/* ---- interpolation and the coordinate maps -------------------------- */

/* The unique polynomial of shape (rows, cols) matching the matrix on the
 * integer node grid (1..rows) x (1..cols). All methods agree exactly. */
MATPOLY_API matpoly_status matpoly_construct(const matpoly_matrix* a,
                                             matpoly_method method,
                                             matpoly_poly** out);

/* Samples the polynomial back at its node grid. */
MATPOLY_API matpoly_status matpoly_to_matrix(const matpoly_poly* p,
                                             matpoly_matrix** out);
MATPOLY_API matpoly_status matpoly_identity_poly(size_t n, matpoly_poly** out);

/* Basis matrices of the interpolation and evaluation maps; their product is
 * the identity. */
MATPOLY_API matpoly_status matpoly_coordinate_matrix(size_t m, size_t n,
                                                     matpoly_matrix** out);
MATPOLY_API matpoly_status matpoly_sampling_matrix(size_t m, size_t n,
                                                   matpoly_matrix** out);

/* ---- dot-product algebra -------------------------------------------- */

MATPOLY_API matpoly_status matpoly_dp_product(const matpoly_poly* p,
                                              const matpoly_poly* q,
                                              matpoly_poly** out);
MATPOLY_API matpoly_status matpoly_dp_inverse(const matpoly_poly* p,
                                              matpoly_poly** out);
MATPOLY_API matpoly_status matpoly_dp_power(const matpoly_poly* p, uint64_t r,
                                            matpoly_poly** out);
MATPOLY_API matpoly_status matpoly_transpose(const matpoly_poly* p,
                                             matpoly_poly** out);

/* {"coeffs": ["-2", "5", "1"], "text": "lambda^2 + 5*lambda - 2"} with
 * ascending coefficients of the characteristic polynomial of the node
 * samples. */
MATPOLY_API matpoly_status matpoly_char_poly(const matpoly_poly* p, char** json_out);

/* Characteristic polynomial applied to p under the dot product; the zero
 * polynomial for every square p. */
MATPOLY_API matpoly_status matpoly_cayley_hamilton_residual(const matpoly_poly* p,
                                                            matpoly_poly** out);

/* {"symmetric": ..., "skew_symmetric": ..., "invertible": ...,
 *  "orthogonal": ..., "involutory": ..., "idempotent": ...,
 *  "nilpotent_index": 2 | null, "periodic_index": 1 | null} */
MATPOLY_API matpoly_status matpoly_classify(const matpoly_poly* p,
                                            unsigned max_period, char** json_out);

/* [{"value": "-1", "text": "x - 8/5", "poly": {...}}, ...] sorted by
 * ascending eigenvalue. */
MATPOLY_API matpoly_status matpoly_eigen_pairs(const matpoly_poly* p,
                                               char** json_out);
MATPOLY_API matpoly_status matpoly_verify_eigenpair(const matpoly_poly* p,
                                                    const char* value,
                                                    const matpoly_poly* x_poly,
                                                    int* holds_out);

/* ---- sampling and self-verification --------------------------------- */

/* CSV "x,y,z,z_decimal" over an inclusive rational grid. Null range strings
 * default to the node range [1, xdim] x [1, ydim]; zero step counts default
 * to 25 per direction. */
MATPOLY_API matpoly_status matpoly_sample_surface(const matpoly_poly* p,
                                                  const char* x_min,
                                                  const char* x_max,
                                                  const char* y_min,
                                                  const char* y_max, size_t steps_x,
                                                  size_t steps_y, char** csv_out);

/* Runs the seeded randomized check suites (linearity, product structure,
 * ring axioms) and returns their JSON reports. MATPOLY_OK only when every
 * suite passes; a counterexample gives MATPOLY_ERR_FAIL with the report
 * still written. */
MATPOLY_API matpoly_status matpoly_verify(uint64_t seed, unsigned linearity_trials,
                                          unsigned product_trials,
                                          unsigned ring_trials, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* MATPOLY_H */
