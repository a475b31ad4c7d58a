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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hpl/absorption.hpp"
#include "hpl/error.hpp"

namespace hpl::absorb {

namespace {

/// Pairs (i, j), i < j, that P⁻ on 2k+2 positions requires to be adjacent.
bool pminus_pair(int k, std::size_t i, std::size_t j) {
  const auto kk = static_cast<std::size_t>(k);
  return j - i <= kk + 1 && !(i == kk && j == kk + 1);
}

const Graph& adjacency_graph(const augment::AugmentedGraph& h, XAdjacency adjacency) {
  return adjacency == XAdjacency::det ? h.det() : h.graph();
}

}  // namespace

bool is_absorber(const augment::AugmentedGraph& h, int k, const Absorber& a, const VertexSet& reservoir) {
  const auto len = static_cast<std::size_t>(2 * k + 2);
  const auto n = h.vertex_count();
  if (a.tuple.size() != len) return false;
  VertexSet seen(n);
  for (auto v : a.tuple) {
    if (v >= n || seen.test(v) || reservoir.test(v)) return false;
    seen.set(v);
  }
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 1; j < len; ++j)
      if (pminus_pair(k, i, j) && !h.det().adjacent(a.tuple[i], a.tuple[j])) return false;
  const auto mid = static_cast<std::size_t>(k);
  return h.in_random(a.tuple[mid], a.tuple[mid + 1]);
}

bool is_x_absorber(const augment::AugmentedGraph& h, const Absorber& a, Vertex x, XAdjacency adjacency) {
  const Graph& g = adjacency_graph(h, adjacency);
  for (auto v : a.tuple)
    if (v == x || !g.adjacent(x, v)) return false;
  return true;
}

AbsorberGraph build_absorber_graph(const augment::AugmentedGraph& h, int k, Vertex x, const VertexSet& reservoir,
                                   const PipelineParams& params) {
  require(k >= 0, ErrorCode::invalid_argument, "k must be non-negative");
  require(k <= 2, ErrorCode::unsupported, "absorber graphs are supported for k <= 2");
  const auto n = h.vertex_count();
  require(x < n, ErrorCode::invalid_argument, "x out of range");
  (void)reservoir;  // B_x is defined on all of V; callers restrict to B_x - R.
  const Graph& g = h.det();
  const auto bounds = resolve(params, n);
  AbsorberGraph out;
  out.x = x;
  out.threshold = bounds.bx_threshold;
  GraphBuilder b(n);
  const VertexSet& nx = g.neighbors(x);
  const auto members = nx.to_vector();

  if (k == 0) {
    // One injective map per ordered pair of distinct vertices of N(x).
    if (1.0 >= out.threshold)
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) b.add_edge(members[i], members[j]);
  } else if (k == 1) {
    // phi(1), phi(4) range over distinct common neighbours of v, v' inside N(x).
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const VertexSet common = nx & g.neighbors(members[i]) & g.neighbors(members[j]);
        const auto c = static_cast<double>(common.count());
        if (c * (c - 1) >= out.threshold && c >= 2) b.add_edge(members[i], members[j]);
      }
  } else {
    out.sampled = true;
    Rng rng(derive_seed(params.seed, 0xB0000000ULL + x));
    constexpr int kSamples = 2000;
    const auto len = static_cast<std::size_t>(2 * k + 2);
    const double space = std::pow(static_cast<double>(members.size()), static_cast<double>(len - 2));
    std::vector<Vertex> tuple(len);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        int hits = 0;
        for (int s = 0; s < kSamples; ++s) {
          for (std::size_t p = 0; p < len; ++p)
            tuple[p] = members[static_cast<std::size_t>(rng.below(members.size()))];
          tuple[static_cast<std::size_t>(k)] = members[i];
          tuple[static_cast<std::size_t>(k) + 1] = members[j];
          bool ok = true;
          for (std::size_t p = 0; p < len && ok; ++p)
            for (std::size_t q = p + 1; q < len && ok; ++q) {
              if (tuple[p] == tuple[q]) ok = false;
              else if (pminus_pair(k, p, q) && !g.adjacent(tuple[p], tuple[q])) ok = false;
            }
          hits += ok ? 1 : 0;
        }
        if (hits > 0 && space * hits / kSamples >= out.threshold) b.add_edge(members[i], members[j]);
      }
  }
  out.pairs = std::move(b).build();
  return out;
}

namespace {

/// Implicit enumeration of all absorbers outside R for k <= 1: oriented
/// random edges (u, v) in edge order, then ordered pairs of distinct common
/// G-neighbours outside R.
class AbsorberIndex {
 public:
  AbsorberIndex(const augment::AugmentedGraph& h, int k, const VertexSet& reservoir) : h_(h), k_(k) {
    for (const auto& e : h.rnd().graph.edges()) {
      if (reservoir.test(e.u) || reservoir.test(e.v)) continue;
      for (int o = 0; o < 2; ++o) {
        const Vertex u = o == 0 ? e.u : e.v;
        const Vertex v = o == 0 ? e.v : e.u;
        std::vector<Vertex> common;
        double weight = 1;
        if (k == 1) {
          common = ((h.det().neighbors(u) & h.det().neighbors(v)) - reservoir).to_vector();
          const auto c = static_cast<double>(common.size());
          weight = c * (c - 1);
        }
        if (weight <= 0) continue;
        total_ += weight;
        entries_.push_back({u, v, std::move(common), total_});
      }
    }
  }

  double total() const { return total_; }

  Absorber at(double index) const {
    auto it = std::upper_bound(entries_.begin(), entries_.end(), index,
                               [](double x, const Entry& e) { return x < e.prefix_end; });
    const double start = it->prefix_end - (k_ == 1 ? weight(*it) : 1.0);
    if (k_ == 0) return {{it->u, it->v}};
    const auto local = static_cast<std::size_t>(index - start);
    const auto c = it->common.size();
    const auto a = local / (c - 1);
    auto b = local % (c - 1);
    if (b >= a) ++b;
    return {{it->common[a], it->u, it->v, it->common[b]}};
  }

 private:
  struct Entry {
    Vertex u, v;
    std::vector<Vertex> common;
    double prefix_end;
  };
  static double weight(const Entry& e) {
    const auto c = static_cast<double>(e.common.size());
    return c * (c - 1);
  }

  const augment::AugmentedGraph& h_;
  int k_;
  double total_ = 0;
  std::vector<Entry> entries_;
};

/// Random absorber for k >= 2 by extending a random oriented random edge.
std::optional<Absorber> random_absorber(const augment::AugmentedGraph& h, int k, const VertexSet& reservoir,
                                        const std::vector<Edge>& edges, Rng& rng) {
  if (edges.empty()) return std::nullopt;
  const auto len = static_cast<std::size_t>(2 * k + 2);
  const Graph& g = h.det();
  for (int tries = 0; tries < 32; ++tries) {
    const auto& e = edges[static_cast<std::size_t>(rng.below(edges.size()))];
    const bool flip = rng.below(2) == 1;
    std::vector<Vertex> t(len, 0);
    std::vector<bool> fixed(len, false);
    t[static_cast<std::size_t>(k)] = flip ? e.v : e.u;
    t[static_cast<std::size_t>(k) + 1] = flip ? e.u : e.v;
    fixed[static_cast<std::size_t>(k)] = fixed[static_cast<std::size_t>(k) + 1] = true;
    // Fill outward from the middle; each position must see its placed P⁻ neighbours.
    std::vector<std::size_t> order;
    for (int d = 1; d <= k; ++d) {
      order.push_back(static_cast<std::size_t>(k - d));
      order.push_back(static_cast<std::size_t>(k + 1 + d));
    }
    VertexSet used = reservoir;
    used.set(t[static_cast<std::size_t>(k)]);
    used.set(t[static_cast<std::size_t>(k) + 1]);
    bool ok = true;
    for (auto p : order) {
      VertexSet cand = g.vertices() - used;
      for (std::size_t q = 0; q < len; ++q)
        if (fixed[q] && pminus_pair(k, std::min(p, q), std::max(p, q))) cand &= g.neighbors(t[q]);
      const auto options = cand.to_vector();
      if (options.empty()) {
        ok = false;
        break;
      }
      t[p] = options[static_cast<std::size_t>(rng.below(options.size()))];
      fixed[p] = true;
      used.set(t[p]);
    }
    if (ok) return Absorber{std::move(t)};
  }
  return std::nullopt;
}

std::vector<Absorber> prune(std::vector<Absorber> selected, PruneRule rule, std::size_t n, Rng& rng) {
  std::vector<Absorber> out;
  if (rule == PruneRule::drop_both) {
    std::vector<int> hits(n, 0);
    for (const auto& a : selected)
      for (auto v : a.tuple) ++hits[v];
    for (auto& a : selected)
      if (std::all_of(a.tuple.begin(), a.tuple.end(), [&](Vertex v) { return hits[v] == 1; }))
        out.push_back(std::move(a));
    return out;
  }
  rng.shuffle(selected);
  VertexSet taken(n);
  for (auto& a : selected) {
    if (std::any_of(a.tuple.begin(), a.tuple.end(), [&](Vertex v) { return taken.test(v); })) continue;
    for (auto v : a.tuple) taken.set(v);
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace

double count_absorbers(const augment::AugmentedGraph& h, int k, const VertexSet& reservoir) {
  require(k == 0 || k == 1, ErrorCode::unsupported, "exact absorber counts are available for k <= 1");
  return AbsorberIndex(h, k, reservoir).total();
}

AbsorberSelection select_absorber_family(const augment::AugmentedGraph& h, const VertexSet& reservoir,
                                         const PipelineParams& params, Rng& rng) {
  const int k = params.k;
  const auto n = h.vertex_count();
  const auto bounds = resolve(params, n);
  AbsorberSelection sel;

  std::optional<AbsorberIndex> index;
  std::vector<Edge> outside_edges;
  if (k <= 1) {
    index.emplace(h, k, reservoir);
    sel.total_absorbers = index->total();
  } else {
    sel.pool_sampled = true;
    for (const auto& e : h.rnd().graph.edges())
      if (!reservoir.test(e.u) && !reservoir.test(e.v)) outside_edges.push_back(e);
  }
  if (bounds.q) {
    sel.q = *bounds.q;
  } else {
    const double target = params.desk.selection_target.value_or(1.0);
    sel.q = sel.total_absorbers > 0 ? std::min(1.0, target / sel.total_absorbers) : 1.0;
  }

  const int cap = std::max(1, params.retries.absorbers);
  for (int attempt = 1; attempt <= cap; ++attempt) {
    sel.attempts = attempt;
    std::vector<Absorber> chosen;
    if (index) {
      if (sel.q > 0 && sel.total_absorbers > 0) {
        // Geometric skipping: gaps between selected indices are Geometric(q).
        const double log1q = sel.q < 1 ? std::log1p(-sel.q) : 0;
        double idx = -1;
        while (true) {
          const double gap = sel.q < 1 ? std::floor(std::log(1.0 - rng.uniform01()) / log1q) : 0;
          idx += 1 + gap;
          if (!(idx < sel.total_absorbers)) break;
          chosen.push_back(index->at(idx));
          if (chosen.size() > 1000000) break;
        }
      }
    } else {
      const auto draws = static_cast<std::size_t>(params.desk.selection_target.value_or(50));
      for (std::size_t s = 0; s < draws; ++s)
        if (auto a = random_absorber(h, k, reservoir, outside_edges, rng)) chosen.push_back(std::move(*a));
    }
    sel.selected = chosen.size();
    auto family = prune(std::move(chosen), params.pruning, n, rng);
    sel.pruned = sel.selected - family.size();
    if (bounds.family_target && family.size() > *bounds.family_target) family.resize(*bounds.family_target);
    sel.family = std::move(family);

    sel.x_counts.assign(n, 0);
    VertexSet in_family(n);
    const Graph& adj = adjacency_graph(h, params.x_adjacency);
    for (const auto& a : sel.family) {
      VertexSet common = h.graph().vertices();
      for (auto v : a.tuple) {
        common &= adj.neighbors(v);
        in_family.set(v);
      }
      common.for_each([&](Vertex x) { ++sel.x_counts[x]; });
    }
    sel.min_count = std::numeric_limits<std::size_t>::max();
    sel.worst_x.reset();
    for (Vertex x = 0; x < n; ++x)
      if (!in_family.test(x) && sel.x_counts[x] < sel.min_count) {
        sel.min_count = sel.x_counts[x];
        sel.worst_x = x;
      }
    if (!sel.worst_x) sel.min_count = 0;

    if (sel.family.empty()) {
      sel.detail = "empty family after pruning";
    } else if (sel.family.size() > bounds.family_cap) {
      sel.detail = "family size " + std::to_string(sel.family.size()) + " exceeds cap " +
                   std::to_string(bounds.family_cap);
    } else if (sel.worst_x && sel.min_count < bounds.absorber_floor) {
      sel.detail = "vertex " + std::to_string(*sel.worst_x) + " has " + std::to_string(sel.min_count) +
                   " x-absorbers, floor " + std::to_string(bounds.absorber_floor);
    } else {
      sel.accepted = true;
      sel.detail.clear();
      break;
    }
  }
  return sel;
}

}  // namespace hpl::absorb
