/* C interface to the misiurewicz library.
 *
 * Every call returns an msw_status. On failure the message of the most recent
 * error on the calling thread is available from msw_last_error(). Strings
 * returned through char** are heap-allocated and released with
 * msw_string_free(); handles are released with their matching _free call.
 * Big integers cross the interface as decimal strings. */
#ifndef MISIUREWICZ_H
#define MISIUREWICZ_H

#include <stddef.h>
#include <stdint.h>

#if defined(MSW_BUILDING_LIBRARY)
#define MSW_API __attribute__((visibility("default")))
#else
#define MSW_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum msw_status {
  MSW_OK = 0,
  MSW_ERR_INVALID_ARGUMENT = 1,
  MSW_ERR_VARIABLE_MISMATCH = 2,
  MSW_ERR_NOT_DIVISIBLE = 3,
  MSW_ERR_RESOURCE_CAP = 4,
  MSW_ERR_ILL_CONDITIONED = 5,
  MSW_ERR_NO_PERIOD_FOUND = 6,
  MSW_ERR_PATTERN_VIOLATION = 7,
  MSW_ERR_PARSE = 8,
  MSW_ERR_INTERNAL = 9
} msw_status;

MSW_API const char* msw_last_error(void);
/* Stable machine-readable name, e.g. "ResourceCapExceeded". */
MSW_API const char* msw_status_name(msw_status status);
MSW_API void msw_string_free(char* s);

MSW_API uint64_t msw_resource_cap(void);
MSW_API void msw_set_resource_cap(uint64_t cap);

/* ---- Integer polynomials ------------------------------------------------- */

typedef struct msw_poly msw_poly;

MSW_API msw_status msw_gleason(unsigned d, unsigned m, unsigned n, msw_poly** out, int* special_case);
MSW_API msw_status msw_critical_iterate(unsigned d, unsigned n, msw_poly** out);
/* Parses "poly(c)=[a0,a1,...]". */
MSW_API msw_status msw_poly_parse(const char* text, msw_poly** out);
MSW_API void msw_poly_free(msw_poly* p);
MSW_API int msw_poly_degree(const msw_poly* p);
/* "poly(c)=[a0,a1,...]" */
MSW_API msw_status msw_poly_text(const msw_poly* p, char** out);
MSW_API msw_status msw_poly_discriminant(const msw_poly* p, char** out);
MSW_API msw_status msw_poly_resultant(const msw_poly* p, const msw_poly* q, char** out);
/* *out = 1 when p mod prime has no repeated factor. */
MSW_API msw_status msw_poly_squarefree_mod(const msw_poly* p, uint64_t prime, int* out);
/* Factorization over Q in the form "content * poly(c)=[..]^m * ...". */
MSW_API msw_status msw_poly_factor_q(const msw_poly* p, char** out, size_t* factor_count);

MSW_API msw_status msw_misiurewicz_count(unsigned d, unsigned m, unsigned n, char** out);
MSW_API msw_status msw_disc_gleason(unsigned d, unsigned m, unsigned n, char** out);

/* ---- Integers -------------------------------------------------------------- */

/* Table notation "-1 * 2^8 * 229^2"; *complete = 0 when a composite residue
 * (printed in brackets) remains after the effort bound. */
MSW_API msw_status msw_factor_int(const char* decimal, uint64_t effort, uint64_t seed, char** out, int* complete);
/* *ok = 1 when the claimed table notation multiplies to the value and every
 * base passes the primality test. */
MSW_API msw_status msw_verify_factorization(const char* decimal, const char* claimed, int* ok);

/* ---- Transversality scan --------------------------------------------------- */

typedef struct msw_scan_options {
  unsigned d;
  unsigned n_min;
  unsigned n_max;
  uint64_t p_max;
  unsigned k;
  unsigned jobs;
} msw_scan_options;

typedef struct msw_scan_result msw_scan_result;

MSW_API msw_status msw_scan_primes(const msw_scan_options* options, msw_scan_result** out);
MSW_API void msw_scan_result_free(msw_scan_result* r);
MSW_API size_t msw_scan_result_count(const msw_scan_result* r);
/* Header "d\tn\tp\tk\tc\tperiod" and one row per failure. */
MSW_API msw_status msw_scan_result_tsv(const msw_scan_result* r, char** out);

/* ---- Property suites ------------------------------------------------------- */

/* Suites: products, discmult, coprime, divseq, gleason-mod2. The report has
 * one "PASS ..." or "FAIL ..." line per checked case; *passed = 1 when every
 * case passes. */
MSW_API msw_status msw_check_suite(const char* suite, unsigned d, unsigned n_max, char** report, int* passed);

/* ---- Bicritical cubics ----------------------------------------------------- */

typedef struct msw_pcf_point {
  double a_re, a_im;
  double v_re, v_im;
  double radius;
  double jac_re, jac_im;
  int excluded;
  int has_portraits;
  unsigned m_plus, n_plus, m_minus, n_minus;
} msw_pcf_point;

typedef struct msw_pcf_result msw_pcf_result;

MSW_API msw_status msw_pcf_solve(unsigned m1, unsigned n1, unsigned m2, unsigned n2, double tol, unsigned jobs,
                                 msw_pcf_result** out);
MSW_API void msw_pcf_result_free(msw_pcf_result* r);
MSW_API size_t msw_pcf_result_count(const msw_pcf_result* r);
MSW_API msw_status msw_pcf_result_point(const msw_pcf_result* r, size_t index, msw_pcf_point* out);
/* JSON array, one object per solution. */
MSW_API msw_status msw_pcf_result_json(const msw_pcf_result* r, char** out);

/* out = {m_plus, n_plus, m_minus, n_minus}. */
MSW_API msw_status msw_orbit_portrait(double a_re, double a_im, double v_re, double v_im, unsigned n_max, double tol,
                                      unsigned out[4]);

#ifdef __cplusplus
}
#endif

#endif
