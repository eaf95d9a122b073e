/*
 * schurpat C interface.
 *
 * Every function returns a schurpat_status. On failure the thread-local
 * message from schurpat_last_error() describes what went wrong. Objects are
 * opaque; each *_free function accepts NULL. Output arguments are written
 * only on success. Strings handed out by the library are released with
 * schurpat_string_free.
 */
#ifndef SCHURPAT_H
#define SCHURPAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SCHURPAT_BUILDING)
#define SCHURPAT_API __declspec(dllexport)
#else
#define SCHURPAT_API __declspec(dllimport)
#endif
#else
#define SCHURPAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum schurpat_status {
  SCHURPAT_OK = 0,
  SCHURPAT_INVALID_INPUT = 1,
  SCHURPAT_INVALID_PARAMETER = 2,
  SCHURPAT_INFEASIBLE = 3,
  SCHURPAT_DEGENERATE_INPUT = 4,
  SCHURPAT_INVALID_MAP = 5,
  SCHURPAT_PRECONDITION = 6,
  SCHURPAT_INTERNAL = 7,
  SCHURPAT_NULL_ARGUMENT = 8,
  SCHURPAT_BUFFER_TOO_SMALL = 9
} schurpat_status;

typedef enum schurpat_norm_kind {
  SCHURPAT_NORM_SCHATTEN = 0, /* p > 0; p = INFINITY is the operator norm */
  SCHURPAT_NORM_KY_FAN = 1
} schurpat_norm_kind;

typedef struct schurpat_norm {
  schurpat_norm_kind kind;
  double p;
  size_t k;
} schurpat_norm;

typedef enum schurpat_side { SCHURPAT_ROW = 0, SCHURPAT_COLUMN = 1 } schurpat_side;

typedef struct schurpat_matrix schurpat_matrix;
typedef struct schurpat_pattern schurpat_pattern;
typedef struct schurpat_symbol schurpat_symbol;
typedef struct schurpat_report schurpat_report;
typedef struct schurpat_check_report schurpat_check_report;

/* --- library ------------------------------------------------------------ */

SCHURPAT_API const char* schurpat_version(void);
SCHURPAT_API const char* schurpat_status_name(schurpat_status status);
/* Message of the last failure on this thread; "" if none. */
SCHURPAT_API const char* schurpat_last_error(void);
/* First violated prefix length of the last infeasible target, 0 if none. */
SCHURPAT_API size_t schurpat_last_error_prefix(void);
SCHURPAT_API void schurpat_string_free(char* s);

/* Parses "a,b,c" where entries may be decimals or fractions like 1/2.
 * *count receives the number of entries even when capacity is too small. */
SCHURPAT_API schurpat_status schurpat_parse_numbers(const char* text, double* out, size_t capacity,
                                                    size_t* count);

/* --- norms -------------------------------------------------------------- */

/* Accepts schatten:P, schatten:inf, operator, inf and kyfan:K. */
SCHURPAT_API schurpat_status schurpat_norm_parse(const char* text, schurpat_norm* out);
SCHURPAT_API schurpat_status schurpat_norm_to_string(const schurpat_norm* norm, char** out);

/* --- matrices ----------------------------------------------------------- */

/* Row-major n*n arrays; im may be NULL for a real matrix. */
SCHURPAT_API schurpat_status schurpat_matrix_create(size_t n, const double* re, const double* im,
                                                    schurpat_matrix** out);
SCHURPAT_API schurpat_status schurpat_matrix_from_json(const char* text, schurpat_matrix** out);
SCHURPAT_API schurpat_status schurpat_matrix_to_json(const schurpat_matrix* a, char** out);
SCHURPAT_API schurpat_status schurpat_matrix_from_text(const char* text, schurpat_matrix** out);
SCHURPAT_API schurpat_status schurpat_matrix_to_text(const schurpat_matrix* a, char** out);
SCHURPAT_API void schurpat_matrix_free(schurpat_matrix* a);
SCHURPAT_API size_t schurpat_matrix_dim(const schurpat_matrix* a);
SCHURPAT_API schurpat_status schurpat_matrix_entry(const schurpat_matrix* a, size_t row, size_t col,
                                                   double* re, double* im);

/* out must hold n values; results are nonincreasing. */
SCHURPAT_API schurpat_status schurpat_singular_values(const schurpat_matrix* a, double* out);
SCHURPAT_API schurpat_status schurpat_hermitian_eigenvalues(const schurpat_matrix* a, double* out);
SCHURPAT_API schurpat_status schurpat_ideal_norm(const schurpat_matrix* a, const schurpat_norm* norm,
                                                 double* out);
SCHURPAT_API schurpat_status schurpat_diag_average(const schurpat_matrix* a, schurpat_matrix** out);

/* --- majorisation ------------------------------------------------------- */

/* Sequences are nonnegative up to tol; pass tol <= 0 for the default 1e-10.
 * *violation receives the first failing prefix length, 0 when none. */
SCHURPAT_API schurpat_status schurpat_is_submajorised(const double* x, size_t nx, const double* y,
                                                      size_t ny, double tol, int* result,
                                                      size_t* violation);
SCHURPAT_API schurpat_status schurpat_is_majorised(const double* x, size_t nx, const double* y,
                                                   size_t ny, double tol, int* result);
SCHURPAT_API schurpat_status schurpat_ky_fan_sum(const double* x, size_t nx, size_t k, double* out);
/* out must hold max(nx, ny) values, zero-padded x' nonincreasing. */
SCHURPAT_API schurpat_status schurpat_intermediate(const double* y, size_t ny, const double* x,
                                                   size_t nx, double tol, double* out);
SCHURPAT_API schurpat_status schurpat_distortion(const double* b, size_t nb, const schurpat_norm* norm,
                                                 size_t n, double* out);

/* --- Schur-Horn --------------------------------------------------------- */

SCHURPAT_API schurpat_status schurpat_schur_horn(const double* diagonal, const double* spectrum,
                                                 size_t n, double tol, schurpat_matrix** out,
                                                 size_t* rotations);
SCHURPAT_API schurpat_status schurpat_kaftal_weiss_witness(const double* y, size_t ny, const double* x,
                                                           size_t nx, size_t n, double tol,
                                                           schurpat_matrix** out);

/* --- patterns ----------------------------------------------------------- */

SCHURPAT_API schurpat_status schurpat_pattern_create(size_t box, const size_t* rows,
                                                     const size_t* cols, size_t count,
                                                     schurpat_pattern** out);
SCHURPAT_API schurpat_status schurpat_pattern_diagonal(size_t n, schurpat_pattern** out);
SCHURPAT_API schurpat_status schurpat_pattern_full(size_t n, schurpat_pattern** out);
SCHURPAT_API schurpat_status schurpat_pattern_toeplitz(const int64_t* offsets, size_t count, size_t n,
                                                       schurpat_pattern** out);
SCHURPAT_API schurpat_status schurpat_pattern_hankel(const size_t* sums, size_t count, size_t n,
                                                     schurpat_pattern** out);
SCHURPAT_API schurpat_status schurpat_pattern_lacunary_hankel(double q, size_t n,
                                                              schurpat_pattern** out);
SCHURPAT_API schurpat_status schurpat_pattern_random(size_t n, double density, uint64_t seed,
                                                     schurpat_pattern** out);
SCHURPAT_API schurpat_status schurpat_pattern_from_json(const char* text, schurpat_pattern** out);
SCHURPAT_API schurpat_status schurpat_pattern_to_json(const schurpat_pattern* p, char** out);
SCHURPAT_API schurpat_status schurpat_pattern_transform(const schurpat_pattern* p, const size_t* a,
                                                        const size_t* b, size_t out_box,
                                                        schurpat_pattern** out);
SCHURPAT_API void schurpat_pattern_free(schurpat_pattern* p);
SCHURPAT_API size_t schurpat_pattern_box(const schurpat_pattern* p);
SCHURPAT_API size_t schurpat_pattern_size(const schurpat_pattern* p);
SCHURPAT_API schurpat_status schurpat_pattern_cell(const schurpat_pattern* p, size_t index,
                                                   size_t* row, size_t* col);

/* parts (may be NULL) receives one schurpat_side per cell, in cell order:
 * ROW for the part bounded per row, COLUMN for the part bounded per column.
 * Infeasibility is reported through *feasible, not the status. */
SCHURPAT_API schurpat_status schurpat_dd_decompose(const schurpat_pattern* p, size_t r, size_t c,
                                                   int* feasible, schurpat_side* parts);
/* Buffers of length box always suffice. */
SCHURPAT_API schurpat_status schurpat_minimal_cover(const schurpat_pattern* p, schurpat_side* sides,
                                                    size_t* indices, size_t capacity, size_t* count);
SCHURPAT_API schurpat_status schurpat_monotone_diagonal(const schurpat_pattern* p, size_t* rows,
                                                        size_t* cols, size_t capacity, size_t* count);

/* --- multipliers -------------------------------------------------------- */

SCHURPAT_API schurpat_status schurpat_symbol_indicator(const schurpat_pattern* support,
                                                       schurpat_symbol** out);
SCHURPAT_API schurpat_status schurpat_symbol_random_signs(const schurpat_pattern* support,
                                                          uint64_t seed, schurpat_symbol** out);
/* Row-major values, zeroed off the support and rescaled to sup-modulus 1. */
SCHURPAT_API schurpat_status schurpat_symbol_create(const schurpat_pattern* support, const double* re,
                                                    const double* im, schurpat_symbol** out);
SCHURPAT_API void schurpat_symbol_free(schurpat_symbol* m);
SCHURPAT_API double schurpat_symbol_scale(const schurpat_symbol* m);

SCHURPAT_API schurpat_status schurpat_apply(const schurpat_symbol* m, const schurpat_matrix* a,
                                            schurpat_matrix** out);
SCHURPAT_API schurpat_status schurpat_multiplier_ratio(const schurpat_symbol* m,
                                                       const schurpat_matrix* a,
                                                       const schurpat_norm* norm, double* out);
SCHURPAT_API schurpat_status schurpat_witness_lower_bound(const schurpat_pattern* p,
                                                          const schurpat_norm* norm, double* out);
SCHURPAT_API schurpat_status schurpat_estimate_multiplier_norm(const schurpat_pattern* p,
                                                               const schurpat_norm* norm,
                                                               size_t trials, uint64_t seed,
                                                               double* out);
SCHURPAT_API schurpat_status schurpat_toeplitz_transfer_check(int64_t d, double p, size_t n,
                                                              double* out);

/* --- sweep reports ------------------------------------------------------ */

SCHURPAT_API schurpat_status schurpat_diagonal_blowup(double p, const size_t* sizes, size_t count,
                                                      schurpat_report** out);
SCHURPAT_API schurpat_status schurpat_hankel_probe(double q, const schurpat_norm* norm,
                                                   const size_t* sizes, size_t count, size_t trials,
                                                   uint64_t seed, schurpat_report** out);
SCHURPAT_API void schurpat_report_free(schurpat_report* r);
SCHURPAT_API size_t schurpat_report_count(const schurpat_report* r);
SCHURPAT_API size_t schurpat_report_size(const schurpat_report* r, size_t i);
SCHURPAT_API double schurpat_report_ratio(const schurpat_report* r, size_t i);
/* Returns 0 when fewer than two positive ratios were available for a fit. */
SCHURPAT_API int schurpat_report_exponent(const schurpat_report* r, double* exponent);
/* Hankel probes only; other reports give 0. */
SCHURPAT_API size_t schurpat_report_cell_count(const schurpat_report* r, size_t i);
SCHURPAT_API size_t schurpat_report_monotone_length(const schurpat_report* r, size_t i);
SCHURPAT_API double schurpat_report_witness_bound(const schurpat_report* r, size_t i);
SCHURPAT_API int schurpat_report_bounded(const schurpat_report* r);
SCHURPAT_API schurpat_status schurpat_report_to_json(const schurpat_report* r, char** out);

/* --- property checks ---------------------------------------------------- */

SCHURPAT_API schurpat_status schurpat_run_checks(const char* suite, uint64_t seed, double scale,
                                                 schurpat_check_report** out);
SCHURPAT_API void schurpat_check_report_free(schurpat_check_report* r);
SCHURPAT_API size_t schurpat_check_count(const schurpat_check_report* r);
SCHURPAT_API const char* schurpat_check_suite(const schurpat_check_report* r, size_t i);
SCHURPAT_API const char* schurpat_check_name(const schurpat_check_report* r, size_t i);
SCHURPAT_API size_t schurpat_check_cases(const schurpat_check_report* r, size_t i);
SCHURPAT_API size_t schurpat_check_failures(const schurpat_check_report* r, size_t i);
SCHURPAT_API const char* schurpat_check_detail(const schurpat_check_report* r, size_t i);

#ifdef __cplusplus
}
#endif

#endif /* SCHURPAT_H */
