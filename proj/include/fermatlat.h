/* fermatlat — exact intersection numbers on the special fibre of the
 * regular model of the prime-exponent Fermat curve.
 *
 * C interface to the shared library: opaque handles, status codes,
 * malloc'd strings released through fermatlat_string_free. All entry
 * points are thread-safe; handles are immutable after creation and may
 * be read from several threads at once.
 */
#ifndef FERMATLAT_H
#define FERMATLAT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef FERMATLAT_API
#if defined(_WIN32)
#define FERMATLAT_API __declspec(dllexport)
#else
#define FERMATLAT_API __attribute__((visibility("default")))
#endif
#endif

typedef enum fermatlat_status {
    FERMATLAT_OK = 0,
    FERMATLAT_ERR_NOT_PRIME = 1,
    FERMATLAT_ERR_BAD_SPLIT = 2,
    FERMATLAT_ERR_BAD_ARGUMENT = 3,
    FERMATLAT_ERR_INTERNAL = 4
} fermatlat_status;

typedef struct fermatlat_model fermatlat_model;
typedef struct fermatlat_bound fermatlat_bound;
typedef struct fermatlat_report fermatlat_report;

FERMATLAT_API const char* fermatlat_version(void);

/* Static description of a status code. */
FERMATLAT_API const char* fermatlat_status_message(fermatlat_status status);

/* Message of the most recent failure on this thread; empty string if none. */
FERMATLAT_API const char* fermatlat_last_error(void);

FERMATLAT_API void fermatlat_string_free(char* s);

/* --- special-fibre model ------------------------------------------- */

FERMATLAT_API fermatlat_status fermatlat_model_build(long p, fermatlat_model** out);
FERMATLAT_API fermatlat_status fermatlat_model_build_with_split(long p, long r, long s,
                                                                fermatlat_model** out);
FERMATLAT_API void fermatlat_model_free(fermatlat_model* model);

FERMATLAT_API long fermatlat_model_p(const fermatlat_model* model);
FERMATLAT_API long fermatlat_model_component_count(const fermatlat_model* model);
FERMATLAT_API fermatlat_status fermatlat_model_split(const fermatlat_model* model, long* r,
                                                     long* s);

/* Serialized configuration; caller frees via fermatlat_string_free. */
FERMATLAT_API char* fermatlat_model_json(const fermatlat_model* model);
FERMATLAT_API char* fermatlat_model_dot(const fermatlat_model* model);

/* --- bound expressions --------------------------------------------- */

/* minimal: 0 regular model, nonzero minimal model.
 * folded: nonzero substitutes the cyclotomic discriminant (minimal only). */
FERMATLAT_API fermatlat_status fermatlat_bound_compute(long p, int minimal, int folded,
                                                       fermatlat_bound** out);
FERMATLAT_API void fermatlat_bound_free(fermatlat_bound* bound);

FERMATLAT_API char* fermatlat_bound_text(const fermatlat_bound* bound);
FERMATLAT_API char* fermatlat_bound_json(const fermatlat_bound* bound);
/* Exact "num" or "num/den" coefficient of log p. */
FERMATLAT_API char* fermatlat_bound_logp_coeff(const fermatlat_bound* bound);

/* Regular, minimal and folded log p coefficients from one pipeline pass.
 * Each out pointer receives a malloc'd exact rational string. */
FERMATLAT_API fermatlat_status fermatlat_bound_coeffs(long p, char** regular, char** minimal,
                                                      char** folded);

/* --- verification -------------------------------------------------- */

/* Runs the full identity suite for one prime. inject_fault corrupts the
 * fibre first so callers can exercise the failure path. */
FERMATLAT_API fermatlat_status fermatlat_verify_prime(long p, int inject_fault,
                                                      fermatlat_report** out);
FERMATLAT_API void fermatlat_report_free(fermatlat_report* report);

FERMATLAT_API int fermatlat_report_ok(const fermatlat_report* report);
FERMATLAT_API char* fermatlat_report_json(const fermatlat_report* report);
/* One pre-formatted table row: p, r, s, a_p, pass/fail. */
FERMATLAT_API char* fermatlat_report_row(const fermatlat_report* report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FERMATLAT_H */
