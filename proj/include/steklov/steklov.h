/* C interface to the Steklov spectral library.
 *
 * All functions return stk_status; on error, stk_last_error() describes the
 * failure for the calling thread. Strings returned through char** are owned
 * by the caller and must be released with stk_string_free(). Graphs are
 * opaque handles released with stk_graph_free().
 */
#ifndef STEKLOV_C_API_H
#define STEKLOV_C_API_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum stk_status {
  STK_OK = 0,
  STK_ERR_PARSE = 1,       /* malformed input (JSON, ids, flags) */
  STK_ERR_INVALID = 2,     /* invalid graph or parameters */
  STK_ERR_SINGULAR = 3,    /* singular interior block */
  STK_ERR_TOLERANCE = 4,   /* ambiguous zero detection */
  STK_ERR_INTERNAL = 5
} stk_status;

typedef struct stk_graph stk_graph;

typedef struct stk_tolerances {
  double eig_group_rel; /* grouping of equal eigenvalues */
  double zero_abs;      /* Z / Z1 membership */
  double compare_abs;   /* spectral comparisons in verifiers */
} stk_tolerances;

void stk_default_tolerances(stk_tolerances* out);

/* Thread-local message for the most recent failure; never NULL. */
const char* stk_last_error(void);

void stk_string_free(char* s);
void stk_graph_free(stk_graph* g);

stk_status stk_graph_from_json(const char* json_text, stk_graph** out);
stk_status stk_graph_to_json(const stk_graph* g, char** out_json);

/* Spectrum report: {"sigma":[...],"multiplicity_groups":...,"Z":...,
 * "Z1":...,"tolerances":{...}}. z_ids is a comma-separated id list for the
 * vanishing-Dirichlet problem, or NULL/empty for the plain Steklov problem. */
stk_status stk_spectrum_report(const stk_graph* g, const char* z_ids,
                               const stk_tolerances* tol, char** out_json);

stk_status stk_lambda1(const stk_graph* g, const char* z_ids, double* out);

/* family: "path" | "star" | "regular-star" | "comb" | "tree-ball".
 * params_json e.g. {"r":3,"l":2} or {"arms":[1,2,3]} or {"l":4}.
 * Either output pointer may be NULL. Oracle JSON:
 * {"family":...,"params":{...},"sigma":[...]}. */
stk_status stk_family(const char* family, const char* params_json, char** out_graph_json,
                      char** out_oracle_json);

/* kind: "mono" | "mono-homotopy" | "rigidity" | "rigidity-geometric" |
 * "rigidity-sigma2" | "rigidity-sym" | "wedge" | "estimate".
 * request_json carries the graphs and parameters (see the CLI for the
 * per-kind schema). out_verdict: 0 = pass, 1 = fail/violation,
 * 2 = hypothesis not met. */
stk_status stk_verify(const char* kind, const char* request_json,
                      const stk_tolerances* tol, char** out_report_json,
                      int* out_verdict);

/* config_json: {"trials":200,"max_vertices":40,"seed":7,"weighted":false,
 * "plant_bug":false}. */
stk_status stk_fuzz(const char* config_json, const stk_tolerances* tol,
                    char** out_report_json, int* out_violations);

stk_status stk_selftest(const stk_tolerances* tol, char** out_report_json,
                        int* out_failures);

#ifdef __cplusplus
}
#endif

#endif /* STEKLOV_C_API_H */
