/* splinez — integer generalized-spline modules on edge-labeled graphs.
 *
 * C interface over the core library: opaque graph handles, status codes,
 * JSON documents in and out. All returned strings are heap-allocated and
 * must be released with sz_string_free. Functions are thread-safe; the
 * last-error message is per thread.
 */
#ifndef SPLINEZ_H
#define SPLINEZ_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sz_status {
  SZ_OK = 0,
  SZ_ERR_PARSE = 1,         /* malformed JSON or integer list */
  SZ_ERR_VALIDATION = 2,    /* input violates a documented invariant */
  SZ_ERR_INCOMPATIBLE = 3,  /* congruence system has no solution */
  SZ_ERR_SIZE_EXCEEDED = 4, /* enumeration cap hit */
  SZ_ERR_NOT_IN_SPAN = 5,
  SZ_ERR_NO_FLOWUP = 6,     /* no flow-up class exists (equality-edge degeneracy) */
  SZ_ERR_BAD_ARGUMENT = 7,
  SZ_ERR_INTERNAL = 8
} sz_status;

typedef struct sz_graph sz_graph;

const char* sz_version(void);

/* Message for the most recent failure on this thread; static storage. */
const char* sz_last_error(void);

void sz_string_free(char* s);

/* Graph document: {"m": [int,...], "edges": [[u,v,r],...]}, vertices 1-based,
 * multipliers >= 1, moduli >= 0 (0 = equality edge). */
sz_status sz_graph_parse(const char* json_text, sz_graph** out);
void sz_graph_free(sz_graph* g);
int sz_graph_vertex_count(const sz_graph* g);
int sz_graph_edge_count(const sz_graph* g);

/* spline_csv: comma-separated entries ordered v_1..v_n, e.g. "36,96,0".
 * *ok_out is 1 when the vector is a spline; the report names the first
 * violated constraint otherwise. */
sz_status sz_verify_spline(const sz_graph* g, const char* spline_csv, int* ok_out,
                           char** report_json);

/* method: "path" | "longest" | "gkm". trace != 0 adds per-step construction
 * detail for the path and longest methods. Report:
 * {"method":..., "n":..., "basis":[[...],...], "leading":[...], "checks":{...}} */
sz_status sz_basis(const sz_graph* g, const char* method, int trace, char** report_json);

/* emit: "matrix" | "lattice" | "both". */
sz_status sz_gkm(const sz_graph* g, const char* emit, char** report_json);

/* zeros: 1-based vertex indices to remove. Report carries the reduced graph
 * document and the old->new vertex map. */
sz_status sz_reduce(const sz_graph* g, const int* zeros, size_t n_zeros, char** report_json);

/* Brute-force validation battery. bound <= 0 selects the default window
 * (lcm of all vertex multipliers and nonzero edge moduli). *ok_out is 1 when
 * every check passed. */
sz_status sz_oracle_validate(const sz_graph* g, long long bound, int* ok_out, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* SPLINEZ_H */
