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

#include "hpl/hpl.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "hpl/absorption.hpp"
#include "hpl/augment.hpp"
#include "hpl/constructions.hpp"
#include "hpl/error.hpp"
#include "hpl/experiments.hpp"
#include "hpl/graph_ops.hpp"
#include "hpl/power_search.hpp"
#include "hpl/prob_bounds.hpp"
#include "hpl/rng.hpp"

struct hpl_graph {
  hpl::Graph g;
};

struct hpl_augmented {
  hpl::augment::AugmentedGraph h;
};

namespace {

using json = nlohmann::ordered_json;

thread_local std::string last_error;

int set_error(int status, const char* message) {
  last_error = message;
  return status;
}

/// Runs `body`, mapping exceptions to status codes and the thread-local
/// message.
template <class F>
int guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return HPL_OK;
  } catch (const hpl::Error& e) {
    return set_error(static_cast<int>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(HPL_ERR_INTERNAL, "out of memory");
  } catch (const std::logic_error& e) {
    return set_error(HPL_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return set_error(HPL_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(HPL_ERR_INTERNAL, "unknown exception");
  }
}

void need(const void* p, const char* name) {
  hpl::require(p != nullptr, hpl::ErrorCode::invalid_argument, std::string(name) + " must not be null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hpl::Rational rational(std::int64_t num, std::int64_t den) {
  hpl::require(den != 0, hpl::ErrorCode::invalid_argument, "zero denominator");
  return {num, den};
}

hpl_graph* wrap(hpl::Graph g) { return new hpl_graph{std::move(g)}; }

thread_local std::string last_variant;

void store_bound(const hpl::bounds::BoundResult& r, double* bound, double* exponent, const char** variant) {
  if (bound) *bound = r.bound;
  if (exponent) *exponent = r.exponent;
  last_variant = r.variant;
  if (variant) *variant = last_variant.c_str();
}

}  // namespace

extern "C" {

const char* hpl_version(void) { return HPL_VERSION_STRING; }

const char* hpl_rng_version(void) { return hpl::kRngVersion.data(); }

const char* hpl_status_name(int status) {
  if (status == HPL_OK) return "ok";
  if (status < HPL_ERR_INVALID_ARGUMENT || status > HPL_ERR_INTERNAL) return "unknown";
  return hpl::to_string(static_cast<hpl::ErrorCode>(status)).data();
}

const char* hpl_last_error(void) { return last_error.c_str(); }

void hpl_string_free(char* s) { std::free(s); }

int hpl_graph_from_edges(size_t n, const uint32_t* edges, size_t edge_count, hpl_graph** out) {
  return guarded([&] {
    need(out, "out");
    if (edge_count) need(edges, "edges");
    hpl::require(n <= hpl::kMaxVertices, hpl::ErrorCode::too_large, "vertex count exceeds 4096");
    std::vector<hpl::Edge> list(edge_count);
    for (size_t i = 0; i < edge_count; ++i) list[i] = {edges[2 * i], edges[2 * i + 1]};
    *out = wrap(hpl::Graph(n, list));
  });
}

int hpl_graph_read(const char* path, hpl_graph** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = wrap(hpl::read_edge_list(std::filesystem::path(path)));
  });
}

int hpl_graph_write(const hpl_graph* g, const char* path) {
  return guarded([&] {
    need(g, "graph");
    need(path, "path");
    hpl::write_edge_list(std::filesystem::path(path), g->g);
  });
}

void hpl_graph_free(hpl_graph* g) { delete g; }

int hpl_graph_vertex_count(const hpl_graph* g, size_t* out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = g->g.vertex_count();
  });
}

int hpl_graph_edge_count(const hpl_graph* g, size_t* out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = g->g.edge_count();
  });
}

int hpl_graph_adjacent(const hpl_graph* g, uint32_t u, uint32_t v, int* out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    const auto n = g->g.vertex_count();
    hpl::require(u < n && v < n, hpl::ErrorCode::invalid_argument, "vertex out of range");
    *out = g->g.adjacent(u, v) ? 1 : 0;
  });
}

int hpl_graph_min_degree(const hpl_graph* g, size_t* out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = hpl::min_degree(g->g);
  });
}

int hpl_graph_edges(const hpl_graph* g, uint32_t* edges) {
  return guarded([&] {
    need(g, "graph");
    if (g->g.edge_count()) need(edges, "edges");
    size_t i = 0;
    for (const auto& e : g->g.edges()) {
      edges[i++] = e.u;
      edges[i++] = e.v;
    }
  });
}

int hpl_graph_power(const hpl_graph* g, int r, hpl_graph** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = wrap(hpl::power(g->g, r));
  });
}

int hpl_construct_extremal(int k, size_t n, int64_t eps_num, int64_t eps_den, hpl_graph** out) {
  return guarded([&] {
    need(out, "out");
    *out = wrap(hpl::construct::extremal_graph({k, n, rational(eps_num, eps_den)}));
  });
}

int hpl_construct_pminus(int k, hpl_graph** out) {
  return guarded([&] {
    need(out, "out");
    *out = wrap(hpl::construct::pminus(k));
  });
}

int hpl_construct_blowup(int k, size_t m, hpl_graph** out) {
  return guarded([&] {
    need(out, "out");
    *out = wrap(hpl::construct::blowup_kminus(k, m));
  });
}

int hpl_construct_dense(size_t n, int64_t alpha_num, int64_t alpha_den, uint64_t seed, hpl_graph** out) {
  return guarded([&] {
    need(out, "out");
    *out = wrap(hpl::construct::dense_host(n, rational(alpha_num, alpha_den), seed));
  });
}

int hpl_degree_hypothesis(const hpl_graph* g, int k, int64_t eps_num, int64_t eps_den, int* out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = hpl::satisfies_degree_hypothesis(g->g, k, rational(eps_num, eps_den)) ? 1 : 0;
  });
}

int hpl_check_lemma31(const hpl_graph* g, int k, int64_t eps_num, int64_t eps_den, size_t* violations,
                      size_t* sets_checked, int* exhaustive) {
  return guarded([&] {
    need(g, "graph");
    const auto report = hpl::check_lemma31(g->g, k, rational(eps_num, eps_den));
    if (violations) *violations = report.violations.size();
    if (sets_checked) *sets_checked = report.sets_checked;
    if (exhaustive) *exhaustive = report.exhaustive ? 1 : 0;
  });
}

int hpl_augment(const hpl_graph* det, double p, uint64_t seed, hpl_augmented** out) {
  return guarded([&] {
    need(det, "graph");
    need(out, "out");
    auto rnd = hpl::augment::sample_gnp(det->g.vertex_count(), p, seed);
    *out = new hpl_augmented{hpl::augment::AugmentedGraph(det->g, std::move(rnd))};
  });
}

void hpl_augmented_free(hpl_augmented* h) { delete h; }

int hpl_augmented_union(const hpl_augmented* h, hpl_graph** out) {
  return guarded([&] {
    need(h, "augmented graph");
    need(out, "out");
    *out = wrap(h->h.graph());
  });
}

int hpl_augmented_random_part(const hpl_augmented* h, hpl_graph** out) {
  return guarded([&] {
    need(h, "augmented graph");
    need(out, "out");
    *out = wrap(h->h.rnd().graph);
  });
}

int hpl_augmented_manifest(const hpl_augmented* h, char** out) {
  return guarded([&] {
    need(h, "augmented graph");
    need(out, "out");
    const auto& rnd = h->h.rnd();
    json j;
    j["n"] = h->h.vertex_count();
    j["p"] = rnd.p;
    j["seed"] = rnd.seed;
    j["generator"] = rnd.generator;
    j["det_edges"] = h->h.det().edge_count();
    j["random_edges"] = rnd.graph.edge_count();
    j["union_edges"] = h->h.graph().edge_count();
    *out = dup_string(j.dump(2));
  });
}

int hpl_search_power_cycle(const hpl_graph* g, int r, uint64_t node_cap, double time_cap_seconds, int* outcome,
                           uint32_t* order, uint64_t* nodes) {
  return guarded([&] {
    need(g, "graph");
    need(outcome, "outcome");
    auto res = hpl::find_power_ham_cycle(g->g, r, {node_cap, time_cap_seconds});
    if (nodes) *nodes = res.nodes;
    switch (res.outcome) {
      case hpl::SearchOutcome::found: *outcome = HPL_FOUND; break;
      case hpl::SearchOutcome::absent: *outcome = HPL_ABSENT; break;
      case hpl::SearchOutcome::budget_exhausted: *outcome = HPL_UNKNOWN; break;
    }
    if (order && res.certificate) std::copy(res.certificate->order.begin(), res.certificate->order.end(), order);
  });
}

int hpl_verify_certificate(const hpl_graph* g, int r, const uint32_t* order, size_t len, int* ok) {
  return guarded([&] {
    need(g, "graph");
    need(ok, "ok");
    if (len) need(order, "order");
    hpl::CycleCertificate cert{std::vector<hpl::Vertex>(order, order + len), r};
    *ok = hpl::verify_certificate(g->g, cert) ? 1 : 0;
  });
}

void hpl_pipeline_options_init(hpl_pipeline_options* opts) {
  if (!opts) return;
  opts->k = 1;
  opts->eps = 0.05;
  opts->C = 40;
  opts->seed = 1;
  opts->preset = nullptr;
  opts->gamma = 0;
}

int hpl_pipeline_run(const hpl_augmented* h, const hpl_pipeline_options* opts, int* success, uint32_t* order,
                     char** report) {
  return guarded([&] {
    need(h, "augmented graph");
    need(opts, "options");
    need(success, "success");
    namespace ab = hpl::absorb;
    hpl::require(opts->k >= 0, hpl::ErrorCode::invalid_argument, "k must be non-negative");
    const double alpha = static_cast<double>(opts->k) / (opts->k + 1) + opts->eps;
    auto params = ab::preset(opts->preset ? opts->preset : "desk", opts->k, h->h.vertex_count(), alpha);
    params.C = opts->C;
    params.seed = opts->seed;
    if (opts->gamma > 0) params.gamma = opts->gamma;
    const auto res = ab::assemble(h->h, params);
    *success = res.success() ? 1 : 0;
    if (order && res.certificate) std::copy(res.certificate->order.begin(), res.certificate->order.end(), order);
    if (report) {
      json j;
      j["success"] = res.success();
      j["failed_stage"] = res.failed_stage ? json(std::string(ab::to_string(*res.failed_stage))) : json(nullptr);
      j["detail"] = res.detail;
      json retries = json::object();
      const auto tries = res.retries();
      for (size_t s = 0; s < tries.size(); ++s) retries[std::string(ab::to_string(static_cast<ab::Stage>(s)))] = tries[s];
      j["retries"] = retries;
      json trace = json::array();
      for (const auto& e : res.trace) {
        json ev;
        ev["stage"] = std::string(ab::to_string(e.stage));
        ev["attempt"] = e.attempt;
        ev["ok"] = e.ok;
        ev["detail"] = e.detail;
        json sizes = json::object();
        for (const auto& [name, value] : e.sizes) sizes[name] = value;
        ev["sizes"] = sizes;
        ev["ms"] = e.millis;
        trace.push_back(ev);
      }
      j["trace"] = trace;
      *report = dup_string(j.dump());
    }
  });
}

int hpl_bound_janson_paper(double rho, double p, double n, double c_f, double* bound, double* exponent,
                           const char** variant) {
  return guarded(
      [&] { store_bound(hpl::bounds::janson_paper_bound({rho, p, n, c_f}), bound, exponent, variant); });
}

int hpl_bound_janson_generic(double lambda, double delta_bar, double* bound, double* exponent,
                             const char** variant) {
  return guarded(
      [&] { store_bound(hpl::bounds::janson_generic_bound({lambda, delta_bar}), bound, exponent, variant); });
}

int hpl_bound_chernoff(double mu, double t, double* bound, double* exponent, const char** variant) {
  return guarded([&] { store_bound(hpl::bounds::chernoff_hypergeometric(mu, t), bound, exponent, variant); });
}

int hpl_implied_c(double c_f, double rho, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = hpl::bounds::implied_c(c_f, rho);
  });
}

int hpl_experiment_run(const char* config_path, const char* out_dir, char** summary) {
  return guarded([&] {
    need(config_path, "config path");
    need(out_dir, "output directory");
    namespace ex = hpl::experiments;
    const auto cfg = ex::load_config(config_path);
    const auto out = ex::run_experiment(cfg, out_dir);
    if (summary) {
      json j;
      j["config_hash"] = ex::config_hash(cfg);
      j["records"] = out.batch.records.size();
      json points = json::array();
      for (const auto& p : out.batch.points)
        points.push_back({{"C", p.c},
                          {"trials", p.trials},
                          {"successes", p.successes},
                          {"unknowns", p.unknowns},
                          {"rate", p.rate},
                          {"ci_lo", p.ci_lo},
                          {"ci_hi", p.ci_hi}});
      j["points"] = points;
      if (out.threshold) j["bracket"] = {out.threshold->c_lo, out.threshold->c_hi};
      *summary = dup_string(j.dump(2));
    }
  });
}

}  // extern "C"
