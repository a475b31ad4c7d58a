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

#include "hpl/graph_ops.hpp"

#include <algorithm>
#include <limits>

#include "hpl/error.hpp"
#include "hpl/rng.hpp"

namespace hpl {

OrderedClique PowerSeq::head(std::size_t count) const {
  count = std::min(count, vertices.size());
  return {std::vector<Vertex>(vertices.begin(), vertices.begin() + static_cast<std::ptrdiff_t>(count))};
}

OrderedClique PowerSeq::tail(std::size_t count) const {
  count = std::min(count, vertices.size());
  return {std::vector<Vertex>(vertices.end() - static_cast<std::ptrdiff_t>(count), vertices.end())};
}

Graph power(const Graph& h, int k) {
  require(k >= 0, ErrorCode::invalid_argument, "power order must be non-negative");
  const auto n = h.vertex_count();
  GraphBuilder b(n);
  if (k == 0) return std::move(b).build();
  // Frontier expansion on bit rows: reach_{d+1} = reach_d ∪ N(frontier_d).
  for (Vertex s = 0; s < n; ++s) {
    VertexSet reached(n);
    reached.set(s);
    VertexSet frontier = reached;
    for (int d = 0; d < k && !frontier.empty(); ++d) {
      VertexSet next(n);
      frontier.for_each([&](Vertex u) { next |= h.neighbors(u); });
      next.subtract(reached);
      reached |= next;
      frontier = std::move(next);
    }
    reached.for_each([&](Vertex v) {
      if (v > s) b.add_edge(s, v);
    });
  }
  return std::move(b).build();
}

VertexSet joint_neighborhood(const Graph& g, std::span<const Vertex> set) {
  VertexSet out = g.vertices();
  for (auto u : set) out &= g.neighbors(u);
  return out;
}

VertexSet joint_neighborhood(const Graph& g, const VertexSet& set) {
  VertexSet out = g.vertices();
  set.for_each([&](Vertex u) { out &= g.neighbors(u); });
  return out;
}

std::size_t min_degree(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
  return best;
}

bool is_clique(const Graph& g, std::span<const Vertex> tuple) {
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] >= g.vertex_count()) return false;
    for (std::size_t j = i + 1; j < tuple.size(); ++j)
      if (!g.adjacent(tuple[i], tuple[j])) return false;
  }
  return true;
}

bool is_power_seq(const Graph& g, std::span<const Vertex> seq, int power, SeqKind kind) {
  if (power < 0) return false;
  const auto n = g.vertex_count();
  for (auto v : seq)
    if (v >= n) return false;
  if (kind == SeqKind::path) {
    VertexSet seen(n);
    for (auto v : seq) {
      if (seen.test(v)) return false;
      seen.set(v);
    }
  }
  const auto r = static_cast<std::size_t>(power);
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t d = 1; d <= r && i + d < seq.size(); ++d)
      if (!g.adjacent(seq[i], seq[i + d])) return false;
  return true;
}

std::size_t induced_min_degree(const Graph& g, const VertexSet& subset) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  subset.for_each([&](Vertex v) { best = std::min(best, g.neighbors(v).count_and(subset)); });
  return best == std::numeric_limits<std::size_t>::max() ? 0 : best;
}

bool satisfies_degree_hypothesis(const Graph& g, int k, const Rational& eps) {
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  const Rational required = (Rational(k, k + 1) + eps) * n;
  return Rational(static_cast<std::int64_t>(min_degree(g))) >= required;
}

namespace {

struct Lemma31Checker {
  const Graph& g;
  int k;
  Rational eps;
  Lemma31Report& report;

  void check(std::span<const Vertex> set) {
    const int j = static_cast<int>(set.size());
    const auto n = static_cast<std::int64_t>(g.vertex_count());
    const VertexSet nj = joint_neighborhood(g, set);
    const auto size = static_cast<std::int64_t>(nj.count());
    ++report.sets_checked;

    const Rational size_bound = (Rational(k + 1 - j, k + 1) + eps * j) * n;
    if (Rational(size) < size_bound)
      report.violations.push_back({Lemma31Violation::Inequality::neighbourhood_size, j,
                                   {set.begin(), set.end()}, Rational(size), size_bound});

    if (j <= k && size > 0) {
      const Rational deg_bound = (Rational(k - j, k - j + 1) + eps) * size;
      const auto deg = static_cast<std::int64_t>(induced_min_degree(g, nj));
      if (Rational(deg) < deg_bound)
        report.violations.push_back({Lemma31Violation::Inequality::induced_min_degree, j,
                                     {set.begin(), set.end()}, Rational(deg), deg_bound});
    }
  }
};

void for_each_subset(std::size_t n, std::size_t j, std::vector<Vertex>& cur, Vertex start,
                     Lemma31Checker& checker) {
  if (cur.size() == j) {
    checker.check(cur);
    return;
  }
  for (Vertex v = start; v < n; ++v) {
    if (n - v < j - cur.size()) break;
    cur.push_back(v);
    for_each_subset(n, j, cur, v + 1, checker);
    cur.pop_back();
  }
}

}  // namespace

Lemma31Report check_lemma31(const Graph& g, int k, const Rational& eps, std::size_t exhaustive_limit,
                            std::size_t samples_per_size, std::uint64_t seed) {
  require(k >= 0, ErrorCode::invalid_argument, "k must be non-negative");
  if (!satisfies_degree_hypothesis(g, k, eps))
    fail(ErrorCode::precondition_violated,
         "min degree " + std::to_string(min_degree(g)) + " is below (k/(k+1)+eps)n for k=" + std::to_string(k) +
             ", eps=" + to_string(eps) + ", n=" + std::to_string(g.vertex_count()));

  Lemma31Report report;
  Lemma31Checker checker{g, k, eps, report};
  const auto n = g.vertex_count();
  const auto max_j = std::min<std::size_t>(static_cast<std::size_t>(k) + 1, n);
  report.exhaustive = n <= exhaustive_limit;

  if (report.exhaustive) {
    std::vector<Vertex> cur;
    for (std::size_t j = 1; j <= max_j; ++j) for_each_subset(n, j, cur, 0, checker);
    return report;
  }

  std::vector<Vertex> pool(n);
  for (Vertex v = 0; v < n; ++v) pool[v] = v;
  for (std::size_t j = 1; j <= max_j; ++j) {
    Rng rng(derive_seed(seed, j));
    for (std::size_t s = 0; s < samples_per_size; ++s) {
      for (std::size_t i = 0; i < j; ++i) std::swap(pool[i], pool[i + rng.below(n - i)]);
      checker.check(std::span<const Vertex>(pool.data(), j));
    }
  }
  return report;
}

}  // namespace hpl
