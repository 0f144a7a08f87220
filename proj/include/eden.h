#ifndef EDEN_H
#define EDEN_H

/* C API for the equivariant distance encoder and its isomorphism-testing
 * harness. All functions returning eden_status follow the same contract:
 * EDEN_OK on success, otherwise an error code with a human-readable message
 * retrievable from eden_last_error() (thread-local, valid until the next
 * failing call on the same thread). Output parameters are written only on
 * success. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct eden_graph eden_graph;
typedef struct eden_encoding eden_encoding;

typedef enum {
  EDEN_OK = 0,
  EDEN_ERR_INVALID_ARGUMENT = 1,
  EDEN_ERR_PARSE = 2,
  EDEN_ERR_NUMERIC = 3,
  EDEN_ERR_NO_MEMORY = 4
} eden_status;

typedef enum {
  EDEN_ENCODER_EDEN = 0,
  EDEN_ENCODER_S1 = 1,
  EDEN_ENCODER_S2 = 2,
  EDEN_ENCODER_S3 = 3,
  EDEN_ENCODER_LAP_MIN = 4, /* Laplacian, smallest nontrivial eigenvalues */
  EDEN_ENCODER_LAP_MAX = 5  /* Laplacian, largest eigenvalues */
} eden_encoder;

typedef enum {
  EDEN_CENTERING_MEAN = 0,
  EDEN_CENTERING_NONE = 1
} eden_centering;

typedef enum {
  EDEN_VERDICT_NON_ISOMORPHIC = 0,
  EDEN_VERDICT_POSSIBLY_ISOMORPHIC = 1,
  EDEN_VERDICT_INCONCLUSIVE = 2
} eden_verdict;

typedef struct {
  int m;                    /* projection width, >= 1 */
  eden_centering centering; /* ignored by the Laplacian encoders */
  double gap_tol;
  double tie_tol;
  double unreachable_value; /* must be < -1 */
} eden_config;

typedef struct {
  double tau_sv;
  double tau_row;
} eden_thresholds;

typedef struct {
  uint64_t corpus_size;
  uint64_t pairs_total;
  uint64_t non_isomorphic;
  uint64_t possibly_isomorphic;
  uint64_t inconclusive;
  uint64_t misjudged;
  double wall_ms;
} eden_scan_report;

eden_config eden_config_default(void);
eden_thresholds eden_thresholds_default(void);
const char* eden_last_error(void);

/* ---- graphs ------------------------------------------------------------ */

/* edges: flat array of 2*edge_count node indices (u0,v0,u1,v1,...). */
eden_status eden_graph_create(int n, const int* edges, size_t edge_count,
                              eden_graph** out);
eden_status eden_graph_parse_graph6(const char* line, eden_graph** out);
/* text: optional "n <count>" header line, then one "u v" pair per line. */
eden_status eden_graph_parse_edge_list(const char* text, eden_graph** out);
eden_status eden_graph_fixture(const char* name, eden_graph** out);
eden_status eden_graph_erdos_renyi(int n, double p, uint64_t seed,
                                   eden_graph** out);
/* Relabels the graph by a random permutation derived from seed. */
eden_status eden_graph_permute(const eden_graph* g, uint64_t seed,
                               eden_graph** out);
/* Two-call pattern: *needed is always set to the required size including the
 * terminating NUL; pass buf = NULL (or a too-small cap, which fails) to query. */
eden_status eden_graph_serialize_graph6(const eden_graph* g, char* buf,
                                        size_t cap, size_t* needed);
int eden_graph_nodes(const eden_graph* g);
int eden_graph_edges(const eden_graph* g);
/* Endpoints of edge `index` in 0..eden_graph_edges()-1, normalized u < v. */
eden_status eden_graph_edge(const eden_graph* g, int index, int* u, int* v);
void eden_graph_free(eden_graph* g);

/* ---- encodings ---------------------------------------------------------- */

eden_status eden_encode(const eden_graph* g, eden_encoder which,
                        const eden_config* cfg, eden_encoding** out);
int eden_encoding_rows(const eden_encoding* e);
int eden_encoding_dims(const eden_encoding* e);
/* Row-major rows*dims feature block; valid while the encoding is alive. */
const double* eden_encoding_values(const eden_encoding* e);
/* dims entries, non-increasing. */
const double* eden_encoding_singular_values(const eden_encoding* e);
int eden_encoding_degenerate(const eden_encoding* e);
int eden_encoding_sign_ties(const eden_encoding* e);
const char* eden_encoding_note(const eden_encoding* e);
eden_status eden_encoding_normalize_unit(const eden_encoding* e, int per_row,
                                         eden_encoding** out);
void eden_encoding_free(eden_encoding* e);

/* ---- isomorphism harness ------------------------------------------------ */

/* reason (optional) receives a NUL-terminated explanation, truncated to
 * reason_cap. */
eden_status eden_compare(const eden_graph* a, const eden_graph* b,
                         const eden_thresholds* t, const eden_config* cfg,
                         eden_verdict* verdict, char* reason, size_t reason_cap);
eden_status eden_calibrate(const eden_graph* const* graphs, size_t count,
                           int trials, uint64_t seed, const eden_config* cfg,
                           eden_thresholds* out);
eden_status eden_scan(const eden_graph* const* graphs, size_t count,
                      const eden_thresholds* t, const eden_config* cfg,
                      eden_scan_report* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* EDEN_H */
