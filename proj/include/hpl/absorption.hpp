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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hpl/augment.hpp"
#include "hpl/graph.hpp"
#include "hpl/graph_ops.hpp"
#include "hpl/power_search.hpp"
#include "hpl/rng.hpp"

namespace hpl::absorb {

// -- Parameters ---------------------------------------------------------------

/// How x-absorbers are recognised: x must be adjacent to all 2k+2 tuple
/// vertices in the deterministic graph, or merely in H.
enum class XAdjacency { det, union_graph };

/// Overlap pruning: drop every absorber involved in an overlapping pair, or
/// visit the selection in random order and keep an absorber unless it meets
/// one already kept.
enum class PruneRule { drop_both, keep_first };

struct StageRetries {
  int reservoir = 50;
  int absorbers = 20;
  int cover = 10;
  int stitch = 20;
};

/// Optional replacements for bounds that the asymptotic formulas make
/// vacuous at small n. Unset fields fall back to the formula.
struct DeskOverrides {
  std::optional<std::size_t> reservoir_size;
  std::optional<double> reservoir_degree_fraction;
  std::optional<double> reservoir_use_fraction;
  std::optional<double> selection_target;  // expected number of selected absorbers
  std::optional<std::size_t> family_target;
  std::optional<std::size_t> family_cap;
  std::optional<std::size_t> absorber_floor;
  std::optional<double> absorbing_path_fraction;
  std::optional<std::size_t> cover_path_cap;
  std::optional<std::size_t> leftover_cap;
  std::optional<std::size_t> absorb_cap;
  double bx_threshold_scale = 1.0;
};

struct PipelineParams {
  int k = 1;
  double eps = 0.05;
  double gamma = 0.01;
  double beta = 0.1;
  double C = 40;
  std::size_t m = 2;
  // Regularity constants. Recorded with the run; the tiling strategy that
  // replaces the regularity partition does not consume them.
  double tau = 1e-6;
  double delta = 1e-3;
  std::optional<double> q;
  XAdjacency x_adjacency = XAdjacency::det;
  PruneRule pruning = PruneRule::drop_both;
  StageRetries retries;
  SearchBudget connect_budget{20000, 0};
  SearchBudget stitch_budget{200000, 0};
  SearchBudget tile_budget{20000, 0};
  std::size_t bridge_max = 2;
  std::uint64_t seed = 1;
  std::string preset = "formula";
  DeskOverrides desk;
};

/// (k+1) 2^{k+1}: internal vertex count of every connecting path.
std::size_t connector_length(int k);
/// (k+1)(2^{k+1} - 2): internal vertex count of the k-walks counted by
/// enumerate_kwalks.
std::size_t kwalk_length(int k);

/// Concrete bounds for an n-vertex instance.
struct ResolvedBounds {
  std::size_t n = 0;
  std::size_t reservoir_size = 0;
  double reservoir_degree_fraction = 0;
  std::size_t reservoir_use_cap = 0;
  std::size_t connector_internal = 0;
  std::optional<double> q;  // unset: derived from selection_target once absorbers are counted
  std::optional<std::size_t> family_target;
  std::size_t family_cap = 0;
  std::size_t absorber_floor = 0;
  std::size_t absorbing_path_cap = 0;
  std::size_t cover_path_cap = 0;
  std::size_t leftover_cap = 0;
  std::size_t absorb_cap = 0;
  double bx_threshold = 0;
  bool hierarchy_ok = false;  // gamma < eps / 4^{k+2}
};

ResolvedBounds resolve(const PipelineParams& params, std::size_t n);

/// Tuned overrides for small instances (k <= 1). Throws unsupported for
/// larger k.
PipelineParams desk_preset(int k, std::size_t n, double alpha);

/// "formula" or "desk"; anything else throws invalid_argument.
PipelineParams preset(std::string_view name, int k, std::size_t n, double alpha);

// -- Reservoir ----------------------------------------------------------------

struct Reservoir {
  VertexSet vertices;
  VertexSet used;
  std::size_t use_cap = 0;
};

struct ReservoirResult {
  std::optional<Reservoir> reservoir;
  int attempts = 0;
  std::size_t worst_degree = 0;  // min_v |N(v) ∩ R| of the last sample
};

/// True iff |N_G(v) ∩ R| >= fraction |R| for every v.
bool reservoir_degree_ok(const Graph& g, const VertexSet& r, double fraction, std::size_t* worst = nullptr);

/// Uniform |R|-subsets until the degree condition holds or the retry cap is
/// reached. Throws degenerate when the resolved size is 0.
ReservoirResult build_reservoir(const Graph& g, const PipelineParams& params, Rng& rng);

// -- Connections --------------------------------------------------------------

enum class ConnectStatus { ok, absent, budget_exhausted, reservoir_exhausted };
std::string_view to_string(ConnectStatus status);

struct ConnectResult {
  ConnectStatus status = ConnectStatus::absent;
  std::optional<PowerSeq> path;
  std::uint64_t nodes = 0;
};

/// (k+1)-path K ... K' in H with exactly (k+1) 2^{k+1} internal vertices
/// outside Z. Throws invalid_argument when K, K' overlap, are not ordered
/// (k+1)-tuples, or meet Z.
ConnectResult connect(const augment::AugmentedGraph& h, const OrderedClique& from, const OrderedClique& to,
                      const VertexSet& z, const PipelineParams& params, const SearchBudget& budget);

/// As connect, with internal vertices drawn from R \ used. Marks them used
/// on success.
ConnectResult connect_through_reservoir(const augment::AugmentedGraph& h, const OrderedClique& from,
                                        const OrderedClique& to, Reservoir& res, const PipelineParams& params,
                                        const SearchBudget& budget);

struct KWalkCount {
  std::size_t internal = 0;
  double count = 0;                    // exact count, rounded to double
  unsigned __int128 exact_count = 0;
  double density = 0;                  // count / n^internal
  std::vector<std::vector<Vertex>> samples;
};

/// Counts k-walks K ... K' with exactly (k+1)(2^{k+1}-2) internal vertices
/// by a transfer matrix over the last k vertices and lists up to `cap` of
/// them in lexicographic order. Throws invalid_argument for k < 1 and
/// unsupported for k >= 3.
KWalkCount enumerate_kwalks(const Graph& g, int k, const OrderedClique& from, const OrderedClique& to,
                            std::size_t cap);

// -- Absorbers ----------------------------------------------------------------

/// Ordered (2k+2)-tuple spanning P⁻ in the deterministic graph outside R
/// whose middle pair (positions k, k+1) is a random edge.
struct Absorber {
  std::vector<Vertex> tuple;
  friend bool operator==(const Absorber&, const Absorber&) = default;
};

bool is_absorber(const augment::AugmentedGraph& h, int k, const Absorber& a, const VertexSet& reservoir);
bool is_x_absorber(const augment::AugmentedGraph& h, const Absorber& a, Vertex x, XAdjacency adjacency);

struct AbsorberGraph {
  Vertex x = 0;
  Graph pairs;
  bool sampled = false;  // support estimated by sampling
  double threshold = 0;
};

/// B_x: pairs vv' in N_G(x) whose count of injective P⁻ -> G[N(x)] maps
/// sending positions k, k+1 to v, v' reaches the resolved threshold. Exact
/// for k <= 1, sampled for k = 2, unsupported beyond.
AbsorberGraph build_absorber_graph(const augment::AugmentedGraph& h, int k, Vertex x, const VertexSet& reservoir,
                                   const PipelineParams& params);

struct AbsorberSelection {
  std::vector<Absorber> family;
  double total_absorbers = 0;  // size of the pool the selection draws from
  bool pool_sampled = false;   // k >= 2: pool built by random extension
  double q = 0;
  std::size_t selected = 0;
  std::size_t pruned = 0;
  std::vector<std::size_t> x_counts;  // x-absorbers in the family, per vertex
  std::size_t min_count = 0;          // over vertices outside the family
  std::optional<Vertex> worst_x;
  int attempts = 0;
  bool accepted = false;
  std::string detail;
};

/// Random q-selection, overlap pruning and acceptance checks (nonempty,
/// within the family cap, per-x floor), retried with fresh randomness.
AbsorberSelection select_absorber_family(const augment::AugmentedGraph& h, const VertexSet& reservoir,
                                         const PipelineParams& params, Rng& rng);

/// Number of absorbers outside R (exact for k <= 1).
double count_absorbers(const augment::AugmentedGraph& h, int k, const VertexSet& reservoir);

struct AbsorbingPath {
  PowerSeq path;
  std::vector<std::size_t> placements;  // start index of family[i] in path
  std::vector<Absorber> family;
};

struct AbsorbingPathResult {
  std::optional<AbsorbingPath> path;
  std::vector<PowerSeq> connectors;
  std::string detail;
};

/// Threads the family in index order, joining consecutive absorbers with
/// connect() while avoiding R and every vertex already in use.
AbsorbingPathResult build_absorbing_path(const augment::AugmentedGraph& h, const VertexSet& reservoir,
                                         const std::vector<Absorber>& family, const PipelineParams& params);

struct AbsorbResult {
  std::optional<PowerSeq> path;
  std::vector<std::pair<Vertex, std::size_t>> insertions;  // (x, family index)
  std::optional<Vertex> unplaced;
};

/// Inserts every x in U into a distinct x-absorber of A (maximum bipartite
/// matching), keeping A's end-sets.
AbsorbResult absorb(const augment::AugmentedGraph& h, const AbsorbingPath& a, const VertexSet& u,
                    const PipelineParams& params);

// -- Cover --------------------------------------------------------------------

struct CoverFamily {
  std::vector<PowerSeq> paths;
  VertexSet leftover;
};

struct CoverResult {
  CoverFamily family;
  bool ok = false;
  std::size_t tiles = 0;
  bool exact_packing = false;
  std::string detail;
};

/// One K⁻_{k+2}(m) in G whose classes 1, 2 carry an alternating path of the
/// random part, laid out as a (k+1)-path of H on (k+2) m vertices (block j
/// lists the j-th vertex of every class). Candidates are tried in the order
/// given by `rank`.
std::optional<std::vector<Vertex>> find_tile(const augment::AugmentedGraph& h, int k, std::size_t m,
                                             const VertexSet& available, const std::vector<std::uint32_t>& rank,
                                             const SearchBudget& budget);

/// Disjoint (k+1)-paths in H - Q: tiles first, then greedy extension,
/// insertion and merging of what is left.
CoverResult cover(const augment::AugmentedGraph& h, const VertexSet& q, const PipelineParams& params, Rng& rng);

// -- Assembly -----------------------------------------------------------------

enum class Stage { reservoir, absorbers, absorbing_path, cover, stitch, absorb, certificate };
std::string_view to_string(Stage stage);

struct StageEvent {
  Stage stage;
  int attempt = 0;
  bool ok = false;
  std::string detail;
  std::vector<std::pair<std::string, double>> sizes;
  double millis = 0;
};

struct AssembleArtifacts {
  std::optional<Reservoir> reservoir;
  std::optional<AbsorberSelection> selection;
  std::optional<AbsorbingPath> absorbing_path;
  std::vector<PowerSeq> absorbing_connectors;
  std::optional<CoverFamily> cover;
  std::vector<PowerSeq> stitch_connectors;
  std::size_t reservoir_used_before_last = 0;
  VertexSet absorbed;
  std::optional<PowerSeq> absorbed_path;
};

struct AssembleResult {
  std::optional<CycleCertificate> certificate;
  std::optional<Stage> failed_stage;
  std::string detail;
  std::vector<StageEvent> trace;
  AssembleArtifacts artifacts;
  ResolvedBounds bounds;

  bool success() const { return certificate.has_value(); }
  /// Attempts per stage, in Stage order.
  std::vector<int> retries() const;
};

/// reservoir -> absorbers + absorbing path -> cover -> stitch -> absorb.
/// Returned certificates have passed verify_certificate against H. Throws
/// precondition_violated when the deterministic part misses the degree
/// hypothesis.
AssembleResult assemble(const augment::AugmentedGraph& h, const PipelineParams& params);

}  // namespace hpl::absorb
