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

#include <array>
#include <cstdint>
#include <vector>

#include "hpl/graph.hpp"
#include "hpl/rational.hpp"

namespace hpl::construct {

/// Parameters of the extremal lower-bound graph: parts V_1..V_{k+1} of size
/// n/(k+1), each with a marked subset W_i of size ceil(eps n).
struct ExtremalSpec {
  int k = 1;
  std::size_t n = 0;
  Rational eps{1, 12};

  std::size_t part_size() const { return n / static_cast<std::size_t>(k + 1); }
  std::size_t marked_size() const;
  /// Throws invalid_spec unless (k+1) | n, 0 < eps < 1 and ceil(eps n) <= n/(k+1).
  void validate() const;
};

/// Complete (k+1)-partite graph on V_1..V_{k+1} plus, inside every part, the
/// complete bipartite graph between W_i and V_i \ W_i. Part i occupies
/// vertices [i*s, (i+1)*s) and W_i is its first ceil(eps n) vertices.
Graph extremal_graph(const ExtremalSpec& spec);

/// Vertices of W_1 ∪ ... ∪ W_{k+1} for the layout used by extremal_graph.
std::vector<Vertex> extremal_marked_vertices(const ExtremalSpec& spec);

/// (k+1)-st power of the path on 2k+2 vertices with its middle edge
/// {k, k+1} (0-indexed) removed.
Graph pminus(int k);

/// Proper (k+1)-colouring of pminus(k): colours 1..k+1, k+1, 1..k in
/// position order. Index i holds the colour of vertex i (0-indexed).
std::vector<int> pminus_coloring(int k);

/// m-blow-up of K_{k+2} minus the edge between classes 0 and 1. Class c
/// occupies vertices [c*m, (c+1)*m).
Graph blowup_kminus(int k, std::size_t m);

/// Binomial graph of density alpha + 0.05 (capped at 1) whose low-degree
/// vertices are then joined to their lowest-indexed non-neighbours until
/// every degree is at least ceil(alpha n). Throws infeasible when
/// ceil(alpha n) >= n.
Graph dense_host(std::size_t n, const Rational& alpha, std::uint64_t seed);

inline constexpr double kDenseHostSlack = 0.05;

}  // namespace hpl::construct
