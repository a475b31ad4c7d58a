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
#include <string_view>
#include <vector>

#include "hpl/graph.hpp"
#include "hpl/graph_ops.hpp"

namespace hpl {

/// Limits for one backtracking search. A zero cap means "no limit".
struct SearchBudget {
  std::uint64_t node_cap = 0;
  double time_cap_seconds = 0;
};

enum class SearchOutcome { found, absent, budget_exhausted };

std::string_view to_string(SearchOutcome outcome);

/// Cyclic order of all n vertices claimed to realise C_n^power.
struct CycleCertificate {
  std::vector<Vertex> order;
  int power = 1;
};

struct CycleSearchResult {
  SearchOutcome outcome = SearchOutcome::absent;
  std::optional<CycleCertificate> certificate;
  std::uint64_t nodes = 0;
};

/// Exact backtracking search for the r-th power of a Hamiltonian cycle.
/// Requires r >= 1 and n >= r + 2 (invalid_argument otherwise). `absent`
/// is only reported after the search tree was exhausted.
CycleSearchResult find_power_ham_cycle(const Graph& h, int r, const SearchBudget& budget = {});

/// True iff `cert.order` is a permutation of V(h) and every two vertices
/// at cyclic distance <= cert.power are adjacent.
bool verify_certificate(const Graph& h, const CycleCertificate& cert);

/// Independent check by enumerating all cyclic orders with vertex 0 fixed.
/// Throws too_large for n > 9.
bool brute_force_oracle(const Graph& h, int r);

inline constexpr std::size_t kBruteForceLimit = 9;

struct PathSearchResult {
  SearchOutcome outcome = SearchOutcome::absent;
  std::optional<PowerSeq> path;
  std::uint64_t nodes = 0;
};

/// Searches for an r-path from ++ (internal_count vertices) ++ to with all
/// internal vertices outside `avoid`, `from` and `to`. Throws
/// invalid_argument when from and to overlap or when avoid meets either.
/// Candidates are tried by ascending degree into the still-free vertices,
/// then by index.
PathSearchResult find_power_path(const Graph& h, int r, const OrderedClique& from, const OrderedClique& to,
                                 const VertexSet& avoid, std::size_t internal_count,
                                 const SearchBudget& budget = {});

struct PackingResult {
  std::size_t size = 0;
  bool exact = false;  // false: greedy lower bound
};

inline constexpr std::size_t kExactPackingLimit = 14;

/// Maximum number of vertex-disjoint K_clique_size in g. Exact (memoised
/// over subsets) for n <= exact_limit, otherwise a greedy lower bound.
PackingResult max_disjoint_cliques(const Graph& g, int clique_size, std::size_t exact_limit = kExactPackingLimit);

}  // namespace hpl
