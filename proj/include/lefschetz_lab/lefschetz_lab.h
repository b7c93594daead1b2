#ifndef LEFSCHETZ_LAB_H
#define LEFSCHETZ_LAB_H

/*
 * C interface to the Lefschetz lab engine.
 *
 * Every function returns an llab_status. On anything other than LLAB_OK the
 * thread-local message from llab_last_error() describes the failure and no
 * output parameter is written. Strings returned through char** are owned by
 * the caller and released with llab_string_free.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(LLAB_BUILDING)
#define LLAB_API __attribute__((visibility("default")))
#else
#define LLAB_API
#endif

typedef enum llab_status {
  LLAB_OK = 0,
  LLAB_PARSE = 1,
  LLAB_INVALID_ARGUMENT = 2,
  LLAB_INFEASIBLE = 3,
  LLAB_EXCLUDED = 4,
  LLAB_DEGENERATE = 5,
  LLAB_INTERNAL = 6
} llab_status;

typedef enum llab_mode { LLAB_MODE_PROBABILISTIC = 0, LLAB_MODE_EXACT = 1 } llab_mode;

/* Homogeneous form over Q together with its ordered variable list. */
typedef struct llab_poly llab_poly;

LLAB_API const char* llab_version(void);
LLAB_API const char* llab_last_error(void);
LLAB_API const char* llab_status_name(llab_status s);
LLAB_API void llab_string_free(char* s);

/*
 * vars_csv: comma-separated names, or NULL to take identifiers in order of
 * first appearance. split: size of the leading x-block, or -1 for none.
 */
LLAB_API llab_status llab_poly_parse(const char* text, const char* vars_csv, int split,
                                     llab_poly** out);
LLAB_API void llab_poly_free(llab_poly* p);
LLAB_API llab_status llab_poly_to_string(const llab_poly* p, char** out);
LLAB_API llab_status llab_poly_degree(const llab_poly* p, unsigned* out);

/* Writes h_0..h_d into out, which must hold capacity entries; *len = d + 1. */
LLAB_API llab_status llab_hilbert(const llab_poly* p, uint64_t* out, unsigned capacity,
                                  unsigned* len);

/* *vanishes = 1 when hess^k f is identically zero. */
LLAB_API llab_status llab_hessian_vanishes(const llab_poly* p, unsigned k, llab_mode mode,
                                           uint64_t seed, int* vanishes);

/*
 * options_json: {"mode": "exact"|"prob", "seed": n, "max_k": k, "trials": t}
 * or NULL. Either output may be NULL.
 */
LLAB_API llab_status llab_analyze(const llab_poly* p, const char* options_json,
                                  char** report_json, char** summary);

/*
 * spec_json: {"family": name, "n": .., "m": .., "d": .., "k": .., "e": ..,
 * "r": .., "variant": .., "case": .., "seed": .., "overrides": {name: poly}}.
 * Writes the instance (polynomial, variables, split, manifest) as JSON.
 */
LLAB_API llab_status llab_generate(const char* spec_json, char** instance_json);

/* Same, returning the generated form as a handle. */
LLAB_API llab_status llab_generate_poly(const char* spec_json, llab_poly** out);

/*
 * options_json: {"suite": "paper", "seed": n, "mode": ..} or NULL.
 * report_json and table may be NULL; *all_passed is 1 when every fixture passed.
 */
LLAB_API llab_status llab_reproduce(const char* options_json, char** report_json, char** table,
                                    int* all_passed);

#ifdef __cplusplus
}
#endif

#endif
