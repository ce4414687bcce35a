/*
 * C interface to the domtriple solver and verification harness.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every call that can fail returns a dt_status; on failure a description is
 * available from dt_last_error() on the same thread until the next failing
 * call. Strings returned through char** are heap allocated and released with
 * dt_string_free().
 *
 * Vertex sets cross the boundary as 64-bit masks, bit v = vertex v.
 */
#ifndef DOMTRIPLE_H
#define DOMTRIPLE_H

#include <stddef.h>
#include <stdint.h>

#if defined(DOMTRIPLE_BUILDING)
#define DT_API __attribute__((visibility("default")))
#else
#define DT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dt_status {
  DT_OK = 0,
  DT_ERR_ARGUMENT = 1,     /* null pointer or bad enum value */
  DT_ERR_PARSE = 2,        /* malformed graph6; see dt_last_error_offset() */
  DT_ERR_RANGE = 3,        /* size outside the supported range */
  DT_ERR_UNDEFINED = 4,    /* gamma_t with an isolated vertex, gamma_c on a disconnected graph */
  DT_ERR_TIMEOUT = 5,      /* search exceeded its time budget */
  DT_ERR_IO = 6,
  DT_ERR_INCONSISTENT = 7, /* a proved relation failed; solver bug */
  DT_ERR_INTERNAL = 8
} dt_status;

typedef enum dt_variant { DT_VARIANT_PLAIN = 0, DT_VARIANT_TOTAL = 1, DT_VARIANT_CONNECTED = 2 } dt_variant;

typedef enum dt_bound_status {
  DT_BOUND_HOLDS = 0,
  DT_BOUND_TIGHT = 1,
  DT_BOUND_VIOLATED = 2,
  DT_BOUND_NOT_APPLICABLE = 3
} dt_bound_status;

typedef enum dt_format { DT_FORMAT_CSV = 0, DT_FORMAT_JSON = 1, DT_FORMAT_NONE = 2 } dt_format;

typedef struct dt_graph dt_graph;
typedef struct dt_report dt_report;

/* gamma_t / gamma_c are 0 when undefined for the graph. */
typedef struct dt_triple {
  int gamma;
  int gamma_t;
  int gamma_c;
  uint64_t gamma_cert;
  uint64_t gamma_t_cert;
  uint64_t gamma_c_cert;
} dt_triple;

/* bound is 1..9. B4 values are doubled (2*gamma_t against 2*gamma + gamma_c).
   The chain fields carry the lower half of B1 and B2. */
typedef struct dt_verdict {
  int bound;
  dt_bound_status status;
  long long lhs;
  long long rhs;
  long long slack;
  int doubled;
  int has_chain;
  long long chain_lhs;
  long long chain_rhs;
  long long chain_slack;
} dt_verdict;

typedef struct dt_verify_options {
  const char* geng_file;      /* graph6 file, "-" for stdin; NULL when enumerating */
  int enumerate_n;            /* > 0 selects internal enumeration on n vertices */
  int dedupe;                 /* enumeration: one graph per isomorphism class */
  const char* const* extras;  /* family specs or graph6 codes appended to the corpus */
  size_t extra_count;
  int workers;                /* <= 0: hardware concurrency */
  double time_budget_seconds; /* per graph; <= 0 disables */
  int tight_cap;              /* witnesses kept per bound */
  dt_format format;
  const char* output_path;    /* NULL or "-" for stdout */
} dt_verify_options;

typedef struct dt_report_stats {
  long parsed;
  long verified;
  long skipped;
  long unsolved;
  long counterexamples;
  long inconsistencies;
  long tallies[9][4];      /* [bound-1][dt_bound_status] */
  long tight_witnesses[9]; /* kept witnesses per bound */
  long lemma_refuted;
  long theorem9_cases;     /* graphs with gamma_t - gamma_c in {0, -1} */
  long theorem9_b8_consistent;
} dt_report_stats;

DT_API const char* dt_version(void);
DT_API const char* dt_last_error(void);
DT_API size_t dt_last_error_offset(void);
DT_API void dt_string_free(char* s);

DT_API dt_status dt_graph_from_graph6(const char* text, dt_graph** out);
/* "cycle:9", "grid_p4:5", "figure_H", "path:3*cycle:4", ... */
DT_API dt_status dt_graph_from_family(const char* spec, dt_graph** out);
/* edges: 2*edge_count vertex indices */
DT_API dt_status dt_graph_from_edges(int n, const int* edges, size_t edge_count, dt_graph** out);
DT_API void dt_graph_free(dt_graph* g);
DT_API int dt_graph_order(const dt_graph* g);
DT_API int dt_graph_size(const dt_graph* g);
DT_API uint64_t dt_graph_neighbors(const dt_graph* g, int v);
DT_API dt_status dt_graph_to_graph6(const dt_graph* g, char** out);

DT_API dt_status dt_minimum_set(const dt_graph* g, dt_variant variant, double budget_seconds,
                                int* value, uint64_t* certificate);
DT_API dt_status dt_oracle_min_set(const dt_graph* g, dt_variant variant, int* value, uint64_t* certificate);
DT_API int dt_is_valid_set(const dt_graph* g, dt_variant variant, uint64_t set);
DT_API dt_status dt_parameter_triple(const dt_graph* g, double budget_seconds, dt_triple* out);
DT_API dt_status dt_evaluate_bound(int bound, const dt_triple* t, dt_verdict* out);
DT_API dt_status dt_params_json(const dt_graph* g, double budget_seconds, char** out);

DT_API void dt_verify_options_init(dt_verify_options* opts);
/* Returns DT_OK whenever the run completed, whatever it found; consult
   dt_report_exit_code(). Rows stream to the configured output. */
DT_API dt_status dt_verify(const dt_verify_options* opts, dt_report** out);
DT_API void dt_report_free(dt_report* r);
/* 0 clean, 1 solver/theorem inconsistency, 2 confirmed B8 counterexample. */
DT_API int dt_report_exit_code(const dt_report* r);
DT_API dt_status dt_report_stats_get(const dt_report* r, dt_report_stats* out);
DT_API dt_status dt_report_summary_text(const dt_report* r, char** out);
DT_API dt_status dt_report_summary_json(const dt_report* r, char** out);

/* JSON array of the first `limit` tight witnesses for bound 1..9. */
DT_API dt_status dt_find_tight(const dt_verify_options* opts, int bound, size_t limit, char** out);
/* JSON array of closed-form-versus-solver checks; *all_match set to 0/1. */
DT_API dt_status dt_families_check(double budget_seconds, char** out, int* all_match);

#ifdef __cplusplus
}
#endif

#endif /* DOMTRIPLE_H */
