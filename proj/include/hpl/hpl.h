// Copyright 2026 The hpl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HPL_HPL_H
#define HPL_HPL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define HPL_API __attribute__((visibility("default")))
#else
#define HPL_API
#endif

/* Status codes. 0 is success; the rest mirror hpl::ErrorCode. */
typedef enum hpl_status {
  HPL_OK = 0,
  HPL_ERR_INVALID_ARGUMENT = 1,
  HPL_ERR_IO = 2,
  HPL_ERR_PARSE = 3,
  HPL_ERR_PRECONDITION = 4,
  HPL_ERR_INFEASIBLE = 5,
  HPL_ERR_INVALID_SPEC = 6,
  HPL_ERR_SIZE_MISMATCH = 7,
  HPL_ERR_TOO_LARGE = 8,
  HPL_ERR_UNSUPPORTED = 9,
  HPL_ERR_DEGENERATE = 10,
  HPL_ERR_BRACKET_INVALID = 11,
  HPL_ERR_INTERNAL = 12
} hpl_status;

typedef enum hpl_search_outcome {
  HPL_FOUND = 0,
  HPL_ABSENT = 1,
  HPL_UNKNOWN = 2
} hpl_search_outcome;

typedef struct hpl_graph hpl_graph;
typedef struct hpl_augmented hpl_augmented;

HPL_API const char* hpl_version(void);
/* Name of the RNG stored in manifests and run records. */
HPL_API const char* hpl_rng_version(void);
HPL_API const char* hpl_status_name(int status);
/* Message of the last failing call on this thread; "" if none. */
HPL_API const char* hpl_last_error(void);
/* Frees strings returned through char** out-parameters. */
HPL_API void hpl_string_free(char* s);

/* -- Graphs ------------------------------------------------------------- */

/* `edges` holds edge_count pairs (u, v). Loops, duplicates and
 * out-of-range endpoints are rejected. */
HPL_API int hpl_graph_from_edges(size_t n, const uint32_t* edges, size_t edge_count, hpl_graph** out);
HPL_API int hpl_graph_read(const char* path, hpl_graph** out);
HPL_API int hpl_graph_write(const hpl_graph* g, const char* path);
HPL_API void hpl_graph_free(hpl_graph* g);

HPL_API int hpl_graph_vertex_count(const hpl_graph* g, size_t* out);
HPL_API int hpl_graph_edge_count(const hpl_graph* g, size_t* out);
HPL_API int hpl_graph_adjacent(const hpl_graph* g, uint32_t u, uint32_t v, int* out);
HPL_API int hpl_graph_min_degree(const hpl_graph* g, size_t* out);
/* Copies the edges as (u, v) pairs with u < v into `edges`, which must
 * hold 2 * edge_count entries. */
HPL_API int hpl_graph_edges(const hpl_graph* g, uint32_t* edges);
/* r-th power: vertices at distance <= r become adjacent. */
HPL_API int hpl_graph_power(const hpl_graph* g, int r, hpl_graph** out);

/* -- Constructions -------------------------------------------------------- */

/* Rationals are passed as numerator / denominator. */
HPL_API int hpl_construct_extremal(int k, size_t n, int64_t eps_num, int64_t eps_den, hpl_graph** out);
HPL_API int hpl_construct_pminus(int k, hpl_graph** out);
HPL_API int hpl_construct_blowup(int k, size_t m, hpl_graph** out);
HPL_API int hpl_construct_dense(size_t n, int64_t alpha_num, int64_t alpha_den, uint64_t seed, hpl_graph** out);

/* *out = 1 iff min degree >= (k/(k+1) + eps) n. */
HPL_API int hpl_degree_hypothesis(const hpl_graph* g, int k, int64_t eps_num, int64_t eps_den, int* out);
/* Checks both joint-neighbourhood inequalities; *violations receives the
 * number of failing sets and *exhaustive whether every set was visited. */
HPL_API int hpl_check_lemma31(const hpl_graph* g, int k, int64_t eps_num, int64_t eps_den, size_t* violations,
                              size_t* sets_checked, int* exhaustive);

/* -- Randomly augmented graphs --------------------------------------------- */

/* H = det ∪ G(n, p) with the pair coins drawn from `seed`. */
HPL_API int hpl_augment(const hpl_graph* det, double p, uint64_t seed, hpl_augmented** out);
HPL_API void hpl_augmented_free(hpl_augmented* h);
HPL_API int hpl_augmented_union(const hpl_augmented* h, hpl_graph** out);
HPL_API int hpl_augmented_random_part(const hpl_augmented* h, hpl_graph** out);
/* JSON object with n, p, seed, generator and the three edge counts. */
HPL_API int hpl_augmented_manifest(const hpl_augmented* h, char** json);

/* -- Exact search ----------------------------------------------------------- */

/* Searches for the r-th power of a Hamiltonian cycle. Caps of 0 are
 * unlimited. `order` may be NULL, else it needs n entries and receives the
 * cyclic order when *outcome is HPL_FOUND. */
HPL_API int hpl_search_power_cycle(const hpl_graph* g, int r, uint64_t node_cap, double time_cap_seconds,
                                   int* outcome, uint32_t* order, uint64_t* nodes);
HPL_API int hpl_verify_certificate(const hpl_graph* g, int r, const uint32_t* order, size_t len, int* ok);

/* -- Absorption pipeline ---------------------------------------------------- */

typedef struct hpl_pipeline_options {
  int k;
  double eps;           /* alpha = k/(k+1) + eps */
  double C;
  uint64_t seed;
  const char* preset;   /* "desk" or "formula"; NULL means "desk" */
  double gamma;         /* <= 0 keeps the preset value */
} hpl_pipeline_options;

HPL_API void hpl_pipeline_options_init(hpl_pipeline_options* opts);

/* Runs the pipeline on H. *success is 1 when a verified certificate was
 * produced; `order` (n entries, may be NULL) then holds it. *report gets a
 * JSON object with the outcome, failing stage and the stage trace. A
 * stage failure is not an error status. */
HPL_API int hpl_pipeline_run(const hpl_augmented* h, const hpl_pipeline_options* opts, int* success,
                             uint32_t* order, char** report);

/* -- Probability bounds ----------------------------------------------------- */

/* `variant` (may be NULL) receives a label of the bound's form. It stays
 * valid until the next bound call on the same thread. */
HPL_API int hpl_bound_janson_paper(double rho, double p, double n, double c_f, double* bound, double* exponent,
                                   const char** variant);
HPL_API int hpl_bound_janson_generic(double lambda, double delta_bar, double* bound, double* exponent,
                                     const char** variant);
HPL_API int hpl_bound_chernoff(double mu, double t, double* bound, double* exponent, const char** variant);
HPL_API int hpl_implied_c(double c_f, double rho, double* out);

/* -- Experiments ------------------------------------------------------------ */

/* Runs the experiment described by a key=value config file and writes
 * records.jsonl, summary.csv, curve.dat (and threshold.json) to out_dir.
 * *summary receives a JSON digest. */
HPL_API int hpl_experiment_run(const char* config_path, const char* out_dir, char** summary);

#ifdef __cplusplus
}
#endif

#endif /* HPL_HPL_H */
