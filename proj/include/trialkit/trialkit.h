/* trialkit — clinical-trial NLP toolkit.
 *
 * C API over the C++ core: opaque context handle, integer status codes,
 * thread-local error messages. Returned strings are heap-allocated and must
 * be released with trialkit_string_free().
 */
#ifndef TRIALKIT_H
#define TRIALKIT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct trialkit_context trialkit_context;

typedef enum trialkit_status {
  TRIALKIT_OK = 0,
  TRIALKIT_ERR_TASK = 1,      /* a task failed wholesale during eval/build */
  TRIALKIT_ERR_CONFIG = 2,    /* bad configuration or missing credential */
  TRIALKIT_ERR_PARSE = 3,     /* malformed payload or schema violation */
  TRIALKIT_ERR_TRANSPORT = 4, /* backend unreachable, retries exhausted */
  TRIALKIT_ERR_VALIDATION = 5,
  TRIALKIT_ERR_IO = 6,
  TRIALKIT_ERR_INTERNAL = 7
} trialkit_status;

const char* trialkit_version(void);

/* Last error message of the calling thread; empty string when none. The
 * pointer stays valid until the thread's next trialkit call. */
const char* trialkit_last_error(void);

/* Create a context from a config JSON document (same schema as the config
 * file). The context owns backends, caches, and template stores. */
trialkit_status trialkit_context_create(const char* config_json, trialkit_context** out);
void trialkit_context_destroy(trialkit_context* ctx);

/* Validate the configuration without touching anything (--dry-run). */
trialkit_status trialkit_validate(trialkit_context* ctx);

/* Parse one registry's records into canonical corpus JSONL.
 * fetch_query NULL: read input_path; non-NULL: pull from the live registry
 * API (resumable checkpoint on network failure). */
trialkit_status trialkit_ingest(trialkit_context* ctx, const char* source,
                                const char* input_path, const char* fetch_query,
                                const char* out_path, size_t* records_out);

/* PII scrub + dedup + date split. corpus_path/out_dir NULL: config defaults.
 * summary_json_out (optional) receives the curation summary. */
trialkit_status trialkit_curate(trialkit_context* ctx, const char* corpus_path,
                                const char* out_dir, char** summary_json_out);

/* Build one instruction dataset, or "all". */
trialkit_status trialkit_build(trialkit_context* ctx, const char* task, const char* out_dir,
                               char** manifest_json_out);

/* Run one benchmark task, or "all". Per-task failures are isolated and
 * reported in the summary; any failure yields TRIALKIT_ERR_TASK. */
trialkit_status trialkit_eval(trialkit_context* ctx, const char* task, const char* out_dir,
                              char** summary_json_out);

/* ---- pure helpers (no context needed) ---------------------------------- */

/* Canonical TrialDocument JSON -> deterministic markdown passage. */
trialkit_status trialkit_render_trial_markdown(const char* doc_json, char** markdown_out);

/* Five-category query JSON -> boolean expression string
 * ("(a OR b) AND (c)"). */
trialkit_status trialkit_compile_query(const char* query_json, char** expression_out);

/* gold/pred: JSON arrays of label strings; classes: JSON array of the class
 * set. Returns BACC, kappa, macro/micro P-R-F1, and the confusion matrix. */
trialkit_status trialkit_classification_metrics(const char* gold_json, const char* pred_json,
                                                const char* classes_json, char** metrics_json_out);

void trialkit_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TRIALKIT_H */
