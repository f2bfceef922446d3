/* C interface to the toric bundle library.
 *
 * Objects are opaque handles created by *_from_json / *_builtin and released
 * with the matching *_free. Every fallible call returns a toric_status; on
 * failure toric_last_error() describes the problem (thread-local, valid until
 * the next call on the same thread). Strings returned through char** are
 * owned by the caller and released with toric_string_free.
 *
 * Ray indices are 0-based everywhere in this interface and in JSON;
 * monomial strings ("x1*x2", "x3^2") are 1-based.
 */
#ifndef TORIC_TORIC_H
#define TORIC_TORIC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TORIC_API __declspec(dllexport)
#else
#define TORIC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum toric_status {
  TORIC_OK = 0,
  TORIC_INVALID = 1,        /* fan failed validation; report available */
  TORIC_INPUT_ERROR = 2,    /* malformed input, bad arguments, overflow */
  TORIC_INTERNAL_ERROR = 3  /* cross-check or integrality assertion failed */
} toric_status;

typedef enum toric_format { TORIC_FORMAT_TEXT = 0, TORIC_FORMAT_JSON = 1 } toric_format;

typedef struct toric_fan toric_fan;
typedef struct toric_bundle toric_bundle;

TORIC_API const char* toric_version(void);
TORIC_API const char* toric_last_error(void);
TORIC_API void toric_string_free(char* s);

/* Fans. Loading only checks structure; toric_fan_validate checks geometry. */
TORIC_API toric_status toric_fan_from_json(const char* json, toric_fan** out);
TORIC_API toric_status toric_fan_builtin(const char* name, toric_fan** out);
TORIC_API void toric_fan_free(toric_fan* fan);
TORIC_API toric_status toric_fan_to_json(const toric_fan* fan, char** out);
TORIC_API toric_status toric_fan_dim(const toric_fan* fan, int* out);
TORIC_API toric_status toric_fan_ray_count(const toric_fan* fan, size_t* out);
/* TORIC_OK when valid, TORIC_INVALID otherwise; the report is written either way. */
TORIC_API toric_status toric_fan_validate(const toric_fan* fan, toric_format format, char** report);

/* Chow ring queries. TORIC_INVALID if the fan is not smooth and complete. */
TORIC_API toric_status toric_degree(const toric_fan* fan, const char* monomial, int64_t* out);
TORIC_API toric_status toric_graded_dimension(const toric_fan* fan, int grade, size_t* out);

/* Bundles, in the rows / characters / dtable JSON models. */
TORIC_API toric_status toric_bundle_from_json(const toric_fan* fan, const char* json, toric_bundle** out);
TORIC_API void toric_bundle_free(toric_bundle* bundle);
TORIC_API toric_status toric_bundle_rank(const toric_bundle* bundle, size_t* out);
TORIC_API toric_status toric_bundle_to_json(const toric_bundle* bundle, char** out);

/* Residue of the connection along ray `ray`: writes the r diagonal entries. */
TORIC_API toric_status toric_residue_diagonal(const toric_bundle* bundle, int ray, int64_t* out, size_t capacity);

/* Reports. max_grade < 0 means the dimension of the fan. */
TORIC_API toric_status toric_chern_report(const toric_fan* fan, const toric_bundle* bundle, int max_grade,
                                          toric_format format, char** out);
TORIC_API toric_status toric_ch_report(const toric_fan* fan, const toric_bundle* bundle, int max_grade,
                                       toric_format format, char** out);
TORIC_API toric_status toric_curves_report(const toric_fan* fan, const toric_bundle* bundle, toric_format format,
                                           char** out);
/* Degree of the top Chern class c_d. */
TORIC_API toric_status toric_top_chern_degree(const toric_fan* fan, const toric_bundle* bundle, int64_t* out);

#ifdef __cplusplus
}
#endif

#endif /* TORIC_TORIC_H */
