#ifndef SEVERI_SEVERI_H
#define SEVERI_SEVERI_H

/*
 * C interface to libseveri.
 *
 * Every object crosses the boundary as an opaque handle owned by the
 * caller and released with its *_free function. Every fallible call
 * returns a severi_status; on failure the message for the calling thread
 * is available from severi_last_error() until the next failing call.
 * Strings returned through char** are heap-allocated by the library and
 * released with severi_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SEVERI_BUILDING_LIBRARY)
#    define SEVERI_API __declspec(dllexport)
#  else
#    define SEVERI_API __declspec(dllimport)
#  endif
#else
#  define SEVERI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum severi_status {
  SEVERI_OK = 0,
  SEVERI_INVALID_ARGUMENT = 1,
  SEVERI_PARSE_ERROR = 2,
  SEVERI_INSUFFICIENT_ORDER = 3,
  SEVERI_BUDGET_EXCEEDED = 4,
  SEVERI_DOMAIN_ERROR = 5,
  SEVERI_INTERNAL_ERROR = 99
} severi_status;

typedef struct severi_series severi_series;
typedef struct severi_nh severi_nh;
typedef struct severi_braid severi_braid;
typedef struct severi_homfly severi_homfly;
typedef struct severi_pinf severi_pinf;

/* Infinity models: y^2 = 0, x y^2 = 0, y^3 = 0. */
typedef enum severi_model { SEVERI_MODEL_A = 0, SEVERI_MODEL_D = 1, SEVERI_MODEL_E = 2 } severi_model;

/* Routes to the n_h of an ADE germ. */
typedef enum severi_ade_method {
  SEVERI_ADE_TRUNCATION = 0, /* infinity-model series + local transform */
  SEVERI_ADE_FORMULA = 1,    /* binomial closed forms / E tables */
  SEVERI_ADE_DYNKIN = 2      /* independent sets of the Dynkin diagram */
} severi_ade_method;

typedef enum severi_homfly_form {
  SEVERI_HOMFLY_UNNORMALIZED = 0, /* multiple of P(unknot) = (a^-1 - a)/z */
  SEVERI_HOMFLY_NORMALIZED = 1,   /* unknot = 1 */
  SEVERI_HOMFLY_PINF = 2          /* lowest a-degree coefficient, in z */
} severi_homfly_form;

SEVERI_API const char* severi_last_error(void);
SEVERI_API const char* severi_status_name(severi_status status);
SEVERI_API void severi_string_free(char* s);

/* Enumeration settings for this process. 0 restores the default (26 letters,
 * or SEVERI_MAX_LETTERS; 1 thread, or SEVERI_THREADS). */
SEVERI_API void severi_set_max_letters(unsigned letters);
SEVERI_API void severi_set_threads(unsigned threads);

/* ---- series ---------------------------------------------------------- */

/* Comma separated decimal coefficients c_0,...,c_N. */
SEVERI_API severi_status severi_series_from_csv(const char* csv, severi_series** out);
/* Closed form (enumerate = 0) or staircase count (enumerate != 0). */
SEVERI_API severi_status severi_series_model(severi_model model, unsigned order, int enumerate,
                                             severi_series** out);
/* numerator / prod(denominators); polynomials in q as coefficient lists. */
SEVERI_API severi_status severi_series_expand_rational(const char* numerator_csv,
                                                       const char* const* denominator_csvs,
                                                       size_t denominator_count, unsigned order,
                                                       severi_series** out);
SEVERI_API void severi_series_free(severi_series* s);
SEVERI_API unsigned severi_series_order(const severi_series* s);
SEVERI_API severi_status severi_series_to_json(const severi_series* s, char** out);
SEVERI_API severi_status severi_series_to_text(const severi_series* s, char** out);

/* ---- n_h vectors ----------------------------------------------------- */

SEVERI_API severi_status severi_nh_from_series_local(const severi_series* hilb, int delta,
                                                     int branches, severi_nh** out);
SEVERI_API severi_status severi_nh_from_series_global(const severi_series* hilb, int genus,
                                                      severi_nh** out);
/* values_csv lists n_low, n_{low+1}, ... */
SEVERI_API severi_status severi_nh_from_values(int is_local, int low, const char* values_csv,
                                               severi_nh** out);
SEVERI_API severi_status severi_nh_from_json(const char* json, severi_nh** out);
SEVERI_API severi_status severi_nh_combine(int geometric_genus, const severi_nh* const* locals,
                                           size_t count, severi_nh** out);
SEVERI_API severi_status severi_nh_ade(const char* label, severi_ade_method method,
                                       severi_nh** out);
/* Inverse transform; branches is only read for local vectors. */
SEVERI_API severi_status severi_nh_to_series(const severi_nh* v, int branches, unsigned order,
                                             severi_series** out);
SEVERI_API void severi_nh_free(severi_nh* v);
SEVERI_API int severi_nh_is_local(const severi_nh* v);
SEVERI_API int severi_nh_low(const severi_nh* v);
SEVERI_API int severi_nh_high(const severi_nh* v);
/* SEVERI_DOMAIN_ERROR when the value does not fit in 64 bits. */
SEVERI_API severi_status severi_nh_value(const severi_nh* v, int h, int64_t* out);
SEVERI_API int severi_nh_equal(const severi_nh* x, const severi_nh* y);
SEVERI_API severi_status severi_nh_to_json(const severi_nh* v, char** out);
/* "[5,10,6,1]" */
SEVERI_API severi_status severi_nh_to_text(const severi_nh* v, char** out);

/* Checks on a global series: low vanishing criterion, vanishing below the
 * geometric genus, and (when euler is non-null, a decimal string) the
 * identities n_g = 1, n_{g-1} = euler + 2g - 2. JSON report; *all_passed
 * receives 1 or 0. */
SEVERI_API severi_status severi_global_checks_json(const severi_series* hilb, int genus,
                                                   int geometric_genus, const char* euler,
                                                   char** out, int* all_passed);

/* ---- braids ---------------------------------------------------------- */

SEVERI_API severi_status severi_braid_parse(const char* text, int strands, severi_braid** out);
SEVERI_API void severi_braid_free(severi_braid* b);
SEVERI_API int severi_braid_strands(const severi_braid* b);
SEVERI_API int severi_braid_writhe(const severi_braid* b);
SEVERI_API size_t severi_braid_length(const severi_braid* b);
SEVERI_API int severi_braid_components(const severi_braid* b);
SEVERI_API int severi_braid_is_positive(const severi_braid* b);
/* Positive words only. */
SEVERI_API severi_status severi_braid_milnor(const severi_braid* b, int* mu);

SEVERI_API severi_status severi_braid_homfly(const severi_braid* b, severi_homfly** out);
SEVERI_API void severi_homfly_free(severi_homfly* h);
SEVERI_API uint64_t severi_homfly_admissible(const severi_homfly* h);
SEVERI_API severi_status severi_homfly_to_text(const severi_homfly* h, severi_homfly_form form,
                                               char** out);

SEVERI_API severi_status severi_braid_pinf(const severi_braid* b, severi_pinf** out);
SEVERI_API void severi_pinf_free(severi_pinf* p);
SEVERI_API size_t severi_pinf_count_size(const severi_pinf* p);
SEVERI_API uint64_t severi_pinf_count(const severi_pinf* p, size_t r);
SEVERI_API severi_status severi_pinf_to_text(const severi_pinf* p, char** out);

/* {"strands","writhe","homfly","pinf","counts"}; homfly / pinf may be null. */
SEVERI_API severi_status severi_braid_to_json(const severi_braid* b, const severi_homfly* homfly,
                                              const severi_pinf* pinf, char** out);
SEVERI_API severi_status severi_braid_markov_json(const severi_braid* b, char** out,
                                                  int* all_passed);

/* ---- catalog and cross-checks ---------------------------------------- */

SEVERI_API severi_status severi_dynkin_json(const char* label, char** out);
SEVERI_API severi_status severi_catalog_json(char** out);
/* *status_out: 1 match, 0 mismatch, -1 n_h side unavailable. */
SEVERI_API severi_status severi_conjecture_json(const char* model, char** out, int* status_out);
/* One "PASS name" / "FAIL name: detail" line per anchor. */
SEVERI_API severi_status severi_selftest(char** report, int* failures);

#ifdef __cplusplus
}
#endif

#endif /* SEVERI_SEVERI_H */
