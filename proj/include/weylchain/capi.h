#ifndef WEYLCHAIN_CAPI_H
#define WEYLCHAIN_CAPI_H

/* C interface to the verification engine.  All functions are synchronous
 * and deterministic.  Output strings are heap-allocated; release them with
 * wc_free.  Status codes mirror the CLI exit codes. */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  WC_OK = 0,    /* all checks passed */
  WC_FAIL = 1,  /* at least one check failed */
  WC_USAGE = 2, /* invalid arguments */
  WC_SCALE = 3  /* resource cap exceeded */
} wc_status;

typedef struct wc_ctx wc_ctx;

wc_ctx* wc_ctx_new(void);
void wc_ctx_free(wc_ctx* ctx);

/* Options.  cache_dir: lattice cache directory ("" disables).  format is
 * "json" (default) or "text".  timing nonzero records wall time in reports
 * (off by default so identical invocations give byte-identical output). */
void wc_ctx_set_cache_dir(wc_ctx* ctx, const char* dir);
void wc_ctx_set_format(wc_ctx* ctx, const char* format);
void wc_ctx_set_max_nodes(wc_ctx* ctx, unsigned long max_nodes);
void wc_ctx_set_max_n(wc_ctx* ctx, int max_n);
void wc_ctx_set_timing(wc_ctx* ctx, int enabled);

/* Message for the most recent WC_USAGE/WC_SCALE (or internal failure). */
const char* wc_last_error(const wc_ctx* ctx);

/* Dimension tables (Weyl, Grassmann over Q/F_2/F_3/F_5, kernel, SNF) for
 * all 1 <= k <= n. */
wc_status wc_dims(wc_ctx* ctx, int n, char** out);

/* Named suite: theorem2 | theorem4 | chain | perfect | sigma | lemmas |
 * uniqueness | relations.  family is "B" or "C" (only sigma/relations
 * consult it today); p must be 2 for the characteristic-2 theorems. */
wc_status wc_verify(wc_ctx* ctx, const char* suite, const char* family, int n, int k,
                    long p, char** out);

/* Chain report for V_{F_2}(lambda_k). */
wc_status wc_chain(wc_ctx* ctx, int n, int k, char** out);

/* Elementary divisors of the lattice inclusion, one per line. */
wc_status wc_snf(wc_ctx* ctx, const char* family, int n, int k, char** out);

/* Full submodule lattice of V_{F_2}(lambda_k) as a DOT graph. */
wc_status wc_lattice_dot(wc_ctx* ctx, int n, int k, char** out);

/* Every suite within scale bounds for the given n, as a JSON array. */
wc_status wc_report_all(wc_ctx* ctx, int n, char** out);

void wc_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* WEYLCHAIN_CAPI_H */
