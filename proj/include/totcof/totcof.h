/* C interface to the totcof library.
 *
 * Objects are opaque handles created by *_new / *_generate / *_parse calls
 * and released with the matching *_free. Every fallible call returns a
 * totcof_status; on failure the message is available from
 * totcof_last_error() until the next call on the same thread. Strings
 * returned through out-parameters are owned by the caller and released with
 * totcof_string_free; strings returned directly are owned by their handle.
 */
#ifndef TOTCOF_H
#define TOTCOF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TOTCOF_API __declspec(dllexport)
#else
#define TOTCOF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum totcof_status {
  TOTCOF_OK = 0,
  TOTCOF_ERR_INPUT = 1,
  TOTCOF_ERR_NOT_A_POSET = 2,
  TOTCOF_ERR_CONTAINMENT = 3,
  TOTCOF_ERR_INVALID_MAP = 4,
  TOTCOF_ERR_PARSE = 5,
  TOTCOF_ERR_VALIDATION = 6,
  TOTCOF_ERR_CONDITION_FAILURE = 7,
  TOTCOF_ERR_LIMIT = 8,
  TOTCOF_ERR_INTERNAL = 9
} totcof_status;

typedef struct totcof_pair totcof_pair;
typedef struct totcof_diagram totcof_diagram;
typedef struct totcof_report totcof_report;

typedef struct totcof_options {
  /* "q" or "fp:<p>"; NULL means "q". */
  const char* field;
  /* Degree window, used when has_degrees is nonzero. */
  int has_degrees;
  int degree_lo;
  int degree_hi;
  /* lim^p for one p when has_p is nonzero, otherwise every p. */
  int has_p;
  int p;
  /* Homology degree q when a diagram of complexes feeds limp. */
  int q;
  /* Last page for ss; negative selects the default. */
  int r_max;
  /* Copied into the report's "input" field; may be NULL. */
  const char* input;
} totcof_options;

TOTCOF_API void totcof_options_init(totcof_options* options);

TOTCOF_API const char* totcof_last_error(void);
TOTCOF_API const char* totcof_status_name(totcof_status status);
TOTCOF_API void totcof_string_free(char* s);

/* Cap on poset size; 0 restores the default (GAMMA_MAX_ELEMENTS or 512). */
TOTCOF_API size_t totcof_max_elements(void);
TOTCOF_API void totcof_set_max_elements(size_t cap);

/* Pairs. */
TOTCOF_API totcof_status totcof_pair_generate(const char* spec, totcof_pair** out);
TOTCOF_API totcof_status totcof_pair_parse_json(const char* text, totcof_pair** out);
TOTCOF_API totcof_status totcof_pair_to_json(const totcof_pair* pair, char** out);
TOTCOF_API size_t totcof_pair_size(const totcof_pair* pair);
/* Returns 1 and writes m when the pair records a ball dimension, else 0. */
TOTCOF_API int totcof_pair_ball_dimension(const totcof_pair* pair, int* m);
TOTCOF_API void totcof_pair_free(totcof_pair* pair);

/* Diagrams over a pair's ambient poset. group is "Z" or "Z/k": Z/k is the
 * complex Z --k--> Z in degrees 1, 0. */
TOTCOF_API totcof_status totcof_diagram_constant(const totcof_pair* pair, const char* group, totcof_diagram** out);
TOTCOF_API totcof_status totcof_diagram_random(const totcof_pair* pair, uint64_t seed, totcof_diagram** out);
/* Diagram JSON of kind "complexes" or "abelian"; an embedded "poset" must
 * match the pair when both are present. pair may be NULL when the JSON
 * embeds the poset. */
TOTCOF_API totcof_status totcof_diagram_parse_json(const char* text, const totcof_pair* pair, totcof_diagram** out);
/* Embedded poset pair of a diagram JSON, for callers without a pair. */
TOTCOF_API totcof_status totcof_diagram_json_pair(const char* text, totcof_pair** out);
TOTCOF_API totcof_status totcof_diagram_to_json(const totcof_diagram* diagram, char** out);
/* 1 for an abelian diagram, 0 for a diagram of complexes. */
TOTCOF_API int totcof_diagram_is_abelian(const totcof_diagram* diagram);
TOTCOF_API void totcof_diagram_free(totcof_diagram* diagram);

/* Jobs. options may be NULL for defaults. */
TOTCOF_API totcof_status totcof_check(const totcof_pair* pair, const totcof_options* options, totcof_report** out);
TOTCOF_API totcof_status totcof_homology(const totcof_pair* pair, const totcof_options* options, totcof_report** out);
TOTCOF_API totcof_status totcof_limp(const totcof_diagram* diagram, const totcof_options* options, totcof_report** out);
TOTCOF_API totcof_status totcof_gamma(const totcof_diagram* diagram, const totcof_pair* pair,
                                      const totcof_options* options, totcof_report** out);
TOTCOF_API totcof_status totcof_holim(const totcof_diagram* diagram, const totcof_options* options,
                                      totcof_report** out);
TOTCOF_API totcof_status totcof_verify(const totcof_diagram* diagram, const totcof_pair* pair,
                                       const totcof_options* options, totcof_report** out);
/* pair may be NULL; with a ball dimension it adds the shift comparison. */
TOTCOF_API totcof_status totcof_ss(const totcof_diagram* diagram, const totcof_pair* pair,
                                   const totcof_options* options, totcof_report** out);

/* Pretty-printed JSON (2-space indent, sorted keys, trailing newline). */
TOTCOF_API const char* totcof_report_json(const totcof_report* report);
TOTCOF_API const char* totcof_report_text(const totcof_report* report);
/* Verdict used by strict mode: 1 when every check in the report passed. */
TOTCOF_API int totcof_report_passed(const totcof_report* report);
TOTCOF_API void totcof_report_free(totcof_report* report);

#ifdef __cplusplus
}
#endif

#endif /* TOTCOF_H */
