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
#include <span>
#include <string>
#include <vector>

#include "hpl/graph.hpp"

namespace hpl::augment {

/// A sample of G(n, p). Every pair {u, v} with u < v is included iff the
/// counter-based coin at index u*n + v of the seed's stream is below p, so
/// the edge set is a pure function of (n, p, seed, generator version).
struct RandomPart {
  Graph graph;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::string generator;
};

RandomPart sample_gnp(std::size_t n, double p, std::uint64_t seed);

/// Recomputes the coin for a single pair; used to audit membership.
bool gnp_pair_included(std::size_t n, double p, std::uint64_t seed, Vertex u, Vertex v);

/// H = G ∪ G(n,p) with edge provenance preserved.
class AugmentedGraph {
 public:
  AugmentedGraph(Graph det, RandomPart rnd);

  std::size_t vertex_count() const noexcept { return union_.vertex_count(); }
  const Graph& det() const noexcept { return det_; }
  const RandomPart& rnd() const noexcept { return rnd_; }
  const Graph& graph() const noexcept { return union_; }

  bool adjacent(Vertex u, Vertex v) const noexcept { return union_.adjacent(u, v); }
  /// True iff uv lies in the random part, even when G also contains it.
  bool in_random(Vertex u, Vertex v) const noexcept { return rnd_.graph.adjacent(u, v); }

 private:
  Graph det_;
  RandomPart rnd_;
  Graph union_;
};

/// Throws size_mismatch if the vertex counts differ.
AugmentedGraph make_union(const Graph& g, const RandomPart& r);

struct PropertyCheck {
  bool pass = true;
  double observed = 0;
  double bound = 0;
};

struct RandomPropertiesReport {
  PropertyCheck edge_count;          // |E(rnd)| <= C n
  PropertyCheck intersecting_pairs;  // ordered intersecting pairs <= 2 C^2 n
  std::vector<PropertyCheck> absorber_hits;  // per x: |E(B_x - R) ∩ E(rnd)| >= beta C n / 4
  std::optional<Vertex> worst_x;
  bool reservoir_within_bound = true;  // |R| <= gamma^2 n

  bool all_pass() const;
};

/// Ordered pairs (e, e') of distinct random edges sharing a vertex.
std::uint64_t ordered_intersecting_pairs(const Graph& g);

/// `bx[x]` is B_x as a graph on V(H).
RandomPropertiesReport check_random_properties(const AugmentedGraph& h, double c, double beta, double gamma,
                                               std::span<const Graph> bx, const VertexSet& reservoir);

}  // namespace hpl::augment
