#ifndef EXC_EXC_H
#define EXC_EXC_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define EXC_API __declspec(dllexport)
#else
#define EXC_API __attribute__((visibility("default")))
#endif

typedef struct exc_context exc_context;
typedef struct exc_result exc_result;

typedef enum exc_status {
  EXC_OK = 0,
  EXC_E_DOMAIN = 1,
  EXC_E_PRECISION = 2,
  EXC_E_AMBIGUOUS = 3,
  EXC_E_EXTERNAL_REFERENCE = 4,
  EXC_E_INCONSISTENCY = 5,
  EXC_E_UNCLASSIFIED = 6,
  EXC_E_FORMAT = 7,
  EXC_E_IO = 8,
  EXC_E_INVALID_ARGUMENT = 9,
  EXC_E_INTERNAL = 10
} exc_status;

typedef enum exc_verdict {
  EXC_VERDICT_DEFINITIVE = 0,
  EXC_VERDICT_NEGATIVE = 1,
  EXC_VERDICT_PARTIAL = 2
} exc_verdict;

EXC_API const char* exc_version(void);
EXC_API const char* exc_status_name(exc_status status);

EXC_API exc_context* exc_context_new(void);
EXC_API void exc_context_free(exc_context* ctx);

/* Message of the last failed call on ctx, "" if none. Valid until the next call. */
EXC_API const char* exc_last_error(const exc_context* ctx);

/* Polynomials are JSON arrays of integer coefficients, constant term first.
   Coefficients that do not fit in 64 bits may be given as decimal strings. */
EXC_API exc_status exc_analyze(exc_context* ctx, const char* poly, uint64_t ell, exc_result** out);

/* twist_bound: largest conductor exponent tried at each ramified prime. */
EXC_API exc_status exc_serre_types(exc_context* ctx, const char* poly, uint64_t ell, int twist_bound,
                                   exc_result** out);

/* level is a decimal string. nu is "trivial" or {modulus, order, exponents} JSON.
   catalog_path may be NULL for the built-in corpus. */
EXC_API exc_status exc_detect(exc_context* ctx, const char* level, int k, const char* nu, uint64_t ell,
                              const char* catalog_path, exc_result** out);

EXC_API exc_status exc_local(exc_context* ctx, const char* poly, uint64_t p, exc_result** out);

/* variant: "unramified", "M2", "M3", "M4" or NULL for every row; c < 0 lists the regimes only. */
EXC_API exc_status exc_corollary1(exc_context* ctx, const char* variant, int c, exc_result** out);

/* m = 0 picks the smallest m with 5 | ell^m - 1 (or m = 1 when ell = 5). */
EXC_API exc_status exc_embed_check(exc_context* ctx, uint64_t ell, int m, exc_result** out);

EXC_API const char* exc_result_json(const exc_result* res);
EXC_API int exc_result_verdict(const exc_result* res);
EXC_API void exc_result_free(exc_result* res);

#ifdef __cplusplus
}
#endif

#endif
