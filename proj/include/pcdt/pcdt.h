/* C interface to the pcdt library: parsing, the demo-language passes,
 * evaluation, alpha-equality and the staged/fused benchmark.
 *
 * Terms are opaque handles released with pcdt_term_free. Strings returned
 * through char** out-parameters are heap allocated and released with
 * pcdt_string_free. Every call returns a pcdt_status; on anything other than
 * PCDT_OK, pcdt_last_error() describes the failure for the calling thread.
 */
#ifndef PCDT_PCDT_H
#define PCDT_PCDT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PCDT_BUILDING)
#    define PCDT_API __declspec(dllexport)
#  else
#    define PCDT_API __declspec(dllimport)
#  endif
#else
#  define PCDT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pcdt_term pcdt_term;

typedef enum pcdt_status {
  PCDT_OK = 0,
  PCDT_EVAL_FAILURE = 1,    /* evaluation produced error or stuck */
  PCDT_PARSE_ERROR = 2,     /* input text rejected by the parser */
  PCDT_INVALID_ARGUMENT = 3,
  PCDT_INTERNAL_ERROR = 4
} pcdt_status;

PCDT_API const char* pcdt_version(void);

/* Message of the last failed call on this thread, "" if none. Parse errors
 * read "<line>:<column>: <message>". */
PCDT_API const char* pcdt_last_error(void);

PCDT_API pcdt_status pcdt_parse(const char* text, size_t length, pcdt_term** out);
PCDT_API void pcdt_term_free(pcdt_term* term);

/* Fully parenthesized rendering with binders x1, x2, ... */
PCDT_API pcdt_status pcdt_pretty(const pcdt_term* term, char** out);
/* Constructor-style rendering, e.g. Lam (\a -> a). */
PCDT_API pcdt_status pcdt_show(const pcdt_term* term, char** out);
PCDT_API pcdt_status pcdt_node_count(const pcdt_term* term, size_t* out);

/* Rewrites let into an applied lambda; constant-folds afterwards when fold != 0. */
PCDT_API pcdt_status pcdt_desugar(const pcdt_term* term, int fold, pcdt_term** out);
PCDT_API pcdt_status pcdt_constfold(const pcdt_term* term, pcdt_term** out);

/* Call-by-value evaluation, staged (desugar then evaluate) or fused (one
 * traversal). *out receives "Int <n>", "<fun>" or "error: <message>"; the
 * last returns PCDT_EVAL_FAILURE. */
PCDT_API pcdt_status pcdt_eval(const pcdt_term* term, int fused, char** out);

PCDT_API pcdt_status pcdt_alpha_eq(const pcdt_term* a, const pcdt_term* b, int* out);

/* One line of JSON: {"staged_visits": a, "fused_visits": b, "staged_ms": x, "fused_ms": y} */
PCDT_API pcdt_status pcdt_bench(int depth, int count, uint64_t seed, char** out);

PCDT_API pcdt_status pcdt_typed_demo(char** out);

PCDT_API void pcdt_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* PCDT_PCDT_H */
