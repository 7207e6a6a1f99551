#ifndef THETALGR_THETALGR_H
#define THETALGR_THETALGR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(THETALGR_BUILDING)
#    define TL_API __declspec(dllexport)
#  else
#    define TL_API __declspec(dllimport)
#  endif
#else
#  define TL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; the nonzero values double as CLI exit codes. */
typedef enum tl_status {
  TL_OK = 0,
  TL_PROPERTY_FAILED = 1,
  TL_PARSE_ERROR = 2,
  TL_INVARIANT_VIOLATION = 3,
  TL_DOMAIN_ERROR = 4,
  TL_INTERNAL_ERROR = 5
} tl_status;

/* A validated point of the Lagrangian Grassmannian. */
typedef struct tl_point tl_point;

TL_API const char* tl_version(void);

/* Message for the last failing call on this thread ("" if none). */
TL_API const char* tl_last_error(void);

/* Every char** output is allocated by the library; release it here. */
TL_API void tl_string_free(char* s);

/* {"n": n, "rep": {"rows", "cols", "data"}} */
TL_API tl_status tl_point_from_json(const char* json, tl_point** out);
TL_API tl_status tl_point_to_json(const tl_point* p, char** out);
TL_API void tl_point_free(tl_point* p);
TL_API int tl_point_rank(const tl_point* p);

/* {"k","l","K_plus","K_minus","theta","plucker_class","gs_list"} */
TL_API tl_status tl_classify(const tl_point* p, char** out_json);

/* {"coords": {"1,2": "r", ...}, "class": "...", "gs_list": [[...], ...]} */
TL_API tl_status tl_plucker(const tl_point* p, char** out_json);

/* exp(x tau) applied to p with c = e^x given as a rational string. */
TL_API tl_status tl_flow(const tl_point* p, const char* c, tl_point** out);

/* count points of the double-coset stratum (k, l), one JSON document per
   line. Every point is re-classified before it is emitted. */
TL_API tl_status tl_sample_stratum(int n, int k, int l, uint64_t seed, size_t count,
                                   char** out_jsonl);

/* Points [I; S] of the cell with index {cell[0], ..., cell[len-1]}. */
TL_API tl_status tl_sample_cell(int n, const int* cell, size_t len, uint64_t seed, size_t count,
                                char** out_jsonl);

/* Factors a 2n x 2n matrix (matrix JSON) as u- * l * u+.
   {"lower", "levi", "upper", "exact"} */
TL_API tl_status tl_factor(const char* matrix_json, char** out_json);

/* Runs one verification suite; TL_PROPERTY_FAILED when a check fails.
   count = 0 selects the suite default. */
TL_API tl_status tl_verify(const char* suite, int n, uint64_t seed, long count, double tolerance,
                           char** out_json);

/* Comma-separated list of suite names. */
TL_API const char* tl_suite_names(void);

#ifdef __cplusplus
}
#endif

#endif
