/* C API for the flagrank engine.
 *
 * All entry points return fr_status; on success (*out) receives a
 * heap-allocated NUL-terminated report (JSON or markdown, per the "format"
 * option) that the caller releases with fr_string_free().  On failure *out is
 * left untouched and fr_last_error() describes the problem.
 *
 * FR_MISMATCH is returned when a computation finished but disagreed with a
 * closed-form answer or an independent cross-check; the report is still
 * written in that case.
 */
#ifndef FLAGRANK_H
#define FLAGRANK_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  FR_OK = 0,
  FR_USAGE = 2,   /* bad arguments / unsupported input */
  FR_MISMATCH = 3 /* verdict disagrees with cross-check or table */
} fr_status;

typedef struct fr_engine fr_engine;

fr_engine* fr_engine_new(void);
void fr_engine_free(fr_engine* e);

/* Options: "seed" (uint64), "retries", "height", "word_length", "max_rank",
 * "threads" (ints), "format" ("json" | "markdown"). */
fr_status fr_set_option(fr_engine* e, const char* key, const char* value);

/* Message for the most recent failing call on this engine; valid until the
 * next call. */
const char* fr_last_error(const fr_engine* e);

void fr_string_free(char* s);

/* Open diagonal orbit on (G/P_I)^n.  family is one of "A".."G"; marked is a
 * comma-separated list of 1-based simple nodes, e.g. "1,3". */
fr_status fr_classify(fr_engine* e, const char* family, int rank,
                      const char* marked, int n, char** out);

/* Recompute a classification table and compare with the closed-form answer.
 * name: "theorem1" | "theorem2" | "corollary". */
fr_status fr_table(fr_engine* e, const char* name, char** out);

/* Levi-module decomposition of the nilradical opposite. */
fr_status fr_decompose(fr_engine* e, const char* family, int rank,
                       const char* marked, char** out);

/* Exact invariance of a case's rational invariant.  case_name: "B", "C",
 * "D", or "D1ll". */
fr_status fr_verify_invariants(fr_engine* e, const char* case_name, int l,
                               int trials, char** out);

/* Cross-ratio infinitude certificate.  kind: "quadruple",
 * "so6-cross-ratio", "so2l-p1l", "so2l-pll"; params are comma-separated
 * rationals like "1/2,1,1". */
fr_status fr_certify(fr_engine* e, const char* kind, int l,
                     const char* params1, const char* params2, int trials,
                     char** out);

#ifdef __cplusplus
}
#endif

#endif /* FLAGRANK_H */
