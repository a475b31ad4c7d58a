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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hpl/graph.hpp"
#include "hpl/rational.hpp"

namespace hpl {

/// Ordered tuple of distinct, pairwise adjacent vertices. The empty tuple is
/// a valid 0-clique.
struct OrderedClique {
  std::vector<Vertex> vertices;
  std::size_t order() const noexcept { return vertices.size(); }
  friend bool operator==(const OrderedClique&, const OrderedClique&) = default;
};

enum class SeqKind { walk, path };

/// Vertex sequence in which every pair at sequence distance <= power is
/// adjacent; paths additionally have distinct vertices.
struct PowerSeq {
  std::vector<Vertex> vertices;
  int power = 0;
  SeqKind kind = SeqKind::path;

  std::size_t size() const noexcept { return vertices.size(); }
  /// First `count` vertices (the start end-set when count = power).
  OrderedClique head(std::size_t count) const;
  /// Last `count` vertices in sequence order.
  OrderedClique tail(std::size_t count) const;
};

/// H^k: uv is an edge iff 1 <= dist_H(u, v) <= k. H^0 is edgeless.
Graph power(const Graph& h, int k);

/// Intersection of N(u) over u in J; N(empty) = V(G).
VertexSet joint_neighborhood(const Graph& g, std::span<const Vertex> set);
VertexSet joint_neighborhood(const Graph& g, const VertexSet& set);

std::size_t min_degree(const Graph& g);
bool is_clique(const Graph& g, std::span<const Vertex> tuple);

bool is_power_seq(const Graph& g, std::span<const Vertex> seq, int power, SeqKind kind);
inline bool is_power_seq(const Graph& g, const PowerSeq& seq) {
  return is_power_seq(g, seq.vertices, seq.power, seq.kind);
}

/// Minimum degree of G[subset] (0 for an empty subset).
std::size_t induced_min_degree(const Graph& g, const VertexSet& subset);

// -- Joint neighbourhood degree inequalities ---------------------------------

struct Lemma31Violation {
  enum class Inequality { neighbourhood_size, induced_min_degree };
  Inequality which;
  int j;
  std::vector<Vertex> set;
  Rational lhs;  // observed value
  Rational rhs;  // required lower bound
};

struct Lemma31Report {
  bool exhaustive = false;
  std::size_t sets_checked = 0;
  std::vector<Lemma31Violation> violations;
};

inline constexpr std::size_t kLemma31ExhaustiveLimit = 14;
inline constexpr std::size_t kLemma31SamplesPerSize = 10000;
inline constexpr std::uint64_t kLemma31Seed = 0x4c656d6d61333131ULL;

/// For min degree >= (k/(k+1) + eps) n, checks
///   |N(J)| >= ((k+1-j)/(k+1) + j eps) n            for |J| = j in [k+1]
///   delta(G[N(J)]) >= ((k-j)/(k-j+1) + eps) |N(J)| for |J| = j in [k]
/// over every J when n <= exhaustive_limit, else over samples_per_size random
/// J per j drawn from a fixed seed. Throws precondition_violated when the
/// degree hypothesis fails.
Lemma31Report check_lemma31(const Graph& g, int k, const Rational& eps,
                            std::size_t exhaustive_limit = kLemma31ExhaustiveLimit,
                            std::size_t samples_per_size = kLemma31SamplesPerSize,
                            std::uint64_t seed = kLemma31Seed);

/// True iff min_degree(g) >= (k/(k+1) + eps) n, compared exactly.
bool satisfies_degree_hypothesis(const Graph& g, int k, const Rational& eps);

}  // namespace hpl
