/* C interface to the semidec library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every function returns a semidec_status; on failure the message is
 * available from semidec_last_error() until the next call on the same
 * thread. Strings returned through char** are owned by the caller and
 * released with semidec_string_free().
 */
#ifndef SEMIDEC_H_
#define SEMIDEC_H_

#include <stddef.h>

#if defined(_WIN32)
#define SEMIDEC_API __declspec(dllexport)
#else
#define SEMIDEC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum semidec_status {
  SEMIDEC_OK                  = 0,
  SEMIDEC_NOT_PRIME           = 1,
  SEMIDEC_BOUND_EXCEEDED      = 2,
  SEMIDEC_AXIOM_VIOLATION     = 3,
  SEMIDEC_DIMENSION_MISMATCH  = 4,
  SEMIDEC_RING_MISMATCH       = 5,
  SEMIDEC_ILLEGAL_DIRECTION   = 6,
  SEMIDEC_DIMENSION_TOO_SMALL = 7,
  SEMIDEC_SIZE_LIMIT_EXCEEDED = 8,
  SEMIDEC_NOT_IDEMPOTENT      = 9,
  SEMIDEC_NOT_CENTRAL         = 10,
  SEMIDEC_FIELD_REQUIRED      = 11,
  SEMIDEC_ACTION_NOT_FAITHFUL = 12,
  SEMIDEC_CONTEXT_MISMATCH    = 13,
  SEMIDEC_NOT_CLOSED          = 14,
  SEMIDEC_NOT_FUNCTIONAL      = 15,
  SEMIDEC_NOT_SURJECTIVE      = 16,
  SEMIDEC_PREIMAGE_MISSING    = 17,
  SEMIDEC_NOT_FOUND           = 18,
  SEMIDEC_CENSUS_MISMATCH     = 19,
  SEMIDEC_UNSUPPORTED_FORMAT  = 20,
  SEMIDEC_INVALID_ARGUMENT    = 21,
  SEMIDEC_PARSE_ERROR         = 22,
  SEMIDEC_PRECONDITION        = 23,
  SEMIDEC_IO_ERROR            = 24,
  SEMIDEC_INTERNAL            = 99
} semidec_status;

typedef struct semidec_ring   semidec_ring;
typedef struct semidec_monoid semidec_monoid;
typedef struct semidec_plan   semidec_plan;

SEMIDEC_API const char* semidec_last_error(void);
SEMIDEC_API const char* semidec_status_name(semidec_status status);
SEMIDEC_API void        semidec_string_free(char* s);

/* Default limit for closures and enumerations; SEMIDEC_LIMIT overrides it. */
SEMIDEC_API size_t semidec_default_limit(void);

/* "zp:<p>", "bool" or "table:<path>". */
SEMIDEC_API semidec_status semidec_ring_parse(const char* spec, semidec_ring** out);
SEMIDEC_API void           semidec_ring_free(semidec_ring* ring);

SEMIDEC_API semidec_status semidec_family_build(const char* kind, size_t n,
                                                const semidec_ring* ring, size_t limit,
                                                semidec_monoid** out);
SEMIDEC_API semidec_status semidec_monoid_load(const char* path, size_t limit,
                                               semidec_monoid** out);
SEMIDEC_API void           semidec_monoid_free(semidec_monoid* m);
SEMIDEC_API size_t         semidec_monoid_size(const semidec_monoid* m);
SEMIDEC_API semidec_status semidec_monoid_json(const semidec_monoid* m, char** out);
/* reports: comma-separated selectors among greens, depth, properties. */
SEMIDEC_API semidec_status semidec_monoid_analyze(const semidec_monoid* m, const char* reports,
                                                  char** out_json);
/* format: json, text or dot. */
SEMIDEC_API semidec_status semidec_monoid_export(const semidec_monoid* m, const char* format,
                                                 char** out);

/* pipeline: "ring" or "field". */
SEMIDEC_API semidec_status semidec_decompose(const char* pipeline, size_t n,
                                             const semidec_ring* ring, size_t limit,
                                             semidec_plan** out);
SEMIDEC_API semidec_status semidec_plan_load(const char* path, size_t limit,
                                             semidec_plan** out);
SEMIDEC_API void           semidec_plan_free(semidec_plan* plan);
SEMIDEC_API size_t         semidec_plan_group_length(const semidec_plan* plan);
/* 1 if every chain step and the composite (when present) verified. */
SEMIDEC_API int            semidec_plan_verified(const semidec_plan* plan);
/* format: json or text. */
SEMIDEC_API semidec_status semidec_plan_export(const semidec_plan* plan, const char* format,
                                               char** out);

/* Verifies a certificate or plan file. Returns SEMIDEC_OK when every
 * certificate in it verifies, otherwise the first failure's status.
 * out_report receives a JSON summary in both cases. */
SEMIDEC_API semidec_status semidec_verify_file(const char* path, size_t limit,
                                               char** out_report);

/* Induction step certificate T_n(R) < [AS_{n-1}(R) wr T_{n-1}(R)] x T_1(R). */
SEMIDEC_API semidec_status semidec_induction_certificate(size_t n, const semidec_ring* ring,
                                                         size_t limit, char** out_json);

/* Exhaustive division search; SEMIDEC_NOT_FOUND when none exists. */
SEMIDEC_API semidec_status semidec_search(const semidec_monoid* source,
                                          const semidec_monoid* target, size_t limit,
                                          char** out_json);

/* kind: T, UT or PT. */
SEMIDEC_API semidec_status semidec_census(size_t n, const semidec_ring* field, const char* kind,
                                          char** out_json);
SEMIDEC_API semidec_status semidec_depth_comparison(size_t n, const semidec_ring* field,
                                                    char** out_json);
SEMIDEC_API semidec_status semidec_crosschecks(char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* SEMIDEC_H_ */
