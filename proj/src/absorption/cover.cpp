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
#include <map>
#include <numeric>
#include <string>

#include "hpl/absorption.hpp"
#include "hpl/error.hpp"
#include "internal/budget.hpp"

namespace hpl::absorb {

namespace {

using Path = std::vector<Vertex>;

std::vector<Vertex> by_rank(const VertexSet& set, const std::vector<std::uint32_t>& rank) {
  auto out = set.to_vector();
  std::sort(out.begin(), out.end(), [&](Vertex a, Vertex b) { return rank[a] < rank[b]; });
  return out;
}

/// Backtracking over tile positions. Position p holds class p mod (k+2) of
/// block p / (k+2); classes 0 and 1 are the pair without G edges.
class TileSearch {
 public:
  TileSearch(const augment::AugmentedGraph& h, int k, std::size_t m, const VertexSet& available,
             const std::vector<std::uint32_t>& rank, detail::BudgetMeter& meter)
      : h_(h), classes_(static_cast<std::size_t>(k) + 2), len_(classes_ * m), rank_(rank), meter_(meter) {
    allowed_.assign(classes_, available);
  }

  /// Stops at the first tile unless `visit` returns true to continue.
  template <class Visit>
  void run(Visit&& visit) {
    seq_.clear();
    stop_ = false;
    step(allowed_, visit);
  }

 private:
  bool paired(std::size_t a, std::size_t b) const { return (a == 0 && b == 1) || (a == 1 && b == 0); }

  template <class Visit>
  void step(const std::vector<VertexSet>& allowed, Visit& visit) {
    if (stop_) return;
    const std::size_t p = seq_.size();
    if (p == len_) {
      if (!visit(seq_)) stop_ = true;
      return;
    }
    if (!meter_.tick()) {
      stop_ = true;
      return;
    }
    const std::size_t c = p % classes_;
    const std::size_t block = p / classes_;
    VertexSet cand = allowed[c];
    // Alternating path a_0 b_0 a_1 b_1 ... in the random part.
    if (c == 1) cand &= h_.rnd().graph.neighbors(seq_[block * classes_]);
    if (c == 0 && block > 0) cand &= h_.rnd().graph.neighbors(seq_[(block - 1) * classes_ + 1]);
    if (cand.empty()) return;
    for (Vertex v : by_rank(cand, rank_)) {
      std::vector<VertexSet> next = allowed;
      for (std::size_t o = 0; o < classes_; ++o) {
        next[o].reset(v);
        if (o != c && !paired(o, c)) next[o] &= h_.det().neighbors(v);
      }
      seq_.push_back(v);
      step(next, visit);
      seq_.pop_back();
      if (stop_) return;
    }
  }

  const augment::AugmentedGraph& h_;
  std::size_t classes_;
  std::size_t len_;
  const std::vector<std::uint32_t>& rank_;
  detail::BudgetMeter& meter_;
  std::vector<VertexSet> allowed_;
  std::vector<Vertex> seq_;
  bool stop_ = false;
};

bool adjacent_all(const Graph& g, Vertex x, const Path& p, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to; ++i)
    if (!g.adjacent(x, p[i])) return false;
  return true;
}

/// True iff a ++ b is an r-path given that a and b are.
bool joinable(const Graph& g, const Path& a, const Path& b, std::size_t r) {
  for (std::size_t i = 0; i < std::min(r, a.size()); ++i)
    for (std::size_t j = 0; j < b.size() && i + 1 + j <= r; ++j)
      if (!g.adjacent(a[a.size() - 1 - i], b[j])) return false;
  return true;
}

class Fallback {
 public:
  Fallback(const augment::AugmentedGraph& h, const PipelineParams& params, std::vector<Path>& paths,
           VertexSet& leftover, const std::vector<std::uint32_t>& rank)
      : g_(h.graph()),
        r_(static_cast<std::size_t>(params.k) + 1),
        params_(params),
        paths_(paths),
        leftover_(leftover),
        rank_(rank) {}

  void run(std::size_t path_cap) {
    bool progress = true;
    while (progress) {
      progress = place_leftovers();
      progress = start_paths() || progress;
      progress = place_leftovers() || progress;
      while (paths_.size() > path_cap && merge_once()) progress = true;
      if (paths_.size() <= path_cap && leftover_.empty()) break;
      if (paths_.size() <= path_cap && !progress) break;
    }
    // Paths too short to carry two end-sets cannot be stitched.
    for (auto it = paths_.begin(); it != paths_.end();) {
      if (it->size() < r_) {
        for (auto v : *it) leftover_.set(v);
        it = paths_.erase(it);
      } else {
        ++it;
      }
    }
  }

 private:
  bool try_place(Vertex x) {
    for (auto& p : paths_) {
      const auto s = p.size();
      if (adjacent_all(g_, x, p, s > r_ ? s - r_ : 0, s)) {
        p.push_back(x);
        return true;
      }
      if (adjacent_all(g_, x, p, 0, std::min(r_, s))) {
        p.insert(p.begin(), x);
        return true;
      }
    }
    for (auto& p : paths_)
      for (std::size_t pos = 1; pos < p.size(); ++pos) {
        const std::size_t lo = pos > r_ ? pos - r_ : 0;
        const std::size_t hi = std::min(p.size(), pos + r_);
        if (adjacent_all(g_, x, p, lo, hi)) {
          p.insert(p.begin() + static_cast<std::ptrdiff_t>(pos), x);
          return true;
        }
      }
    return false;
  }

  bool place_leftovers() {
    bool any = false;
    bool again = true;
    while (again) {
      again = false;
      for (Vertex x : by_rank(leftover_, rank_))
        if (try_place(x)) {
          leftover_.reset(x);
          again = any = true;
        }
    }
    return any;
  }

  // Greedy power path inside the leftover, extending towards the vertex
  // with the fewest onward options.
  Path grow(Vertex start) const {
    Path p{start};
    VertexSet pool = leftover_;
    pool.reset(start);
    for (int side = 0; side < 2; ++side) {
      while (true) {
        VertexSet cand = pool;
        const auto s = p.size();
        for (std::size_t i = s > r_ ? s - r_ : 0; i < s; ++i) cand &= g_.neighbors(p[i]);
        if (cand.empty()) break;
        Vertex best = 0;
        std::size_t best_key = SIZE_MAX;
        for (Vertex v : by_rank(cand, rank_)) {
          const auto key = g_.neighbors(v).count_and(pool);
          if (key < best_key) {
            best_key = key;
            best = v;
          }
        }
        p.push_back(best);
        pool.reset(best);
      }
      std::reverse(p.begin(), p.end());
    }
    return p;
  }

  bool start_paths() {
    bool any = false;
    while (!leftover_.empty()) {
      Path best;
      for (Vertex s : by_rank(leftover_, rank_)) {
        Path p = grow(s);
        if (p.size() > best.size()) best = std::move(p);
        if (best.size() >= 2 * r_) break;
      }
      if (best.size() < r_) break;
      for (auto v : best) leftover_.reset(v);
      paths_.push_back(std::move(best));
      any = true;
    }
    return any;
  }

  bool merge_pair(std::size_t i, std::size_t j) {
    for (int oi = 0; oi < 2; ++oi)
      for (int oj = 0; oj < 2; ++oj) {
        Path a = paths_[i];
        Path b = paths_[j];
        if (oi) std::reverse(a.begin(), a.end());
        if (oj) std::reverse(b.begin(), b.end());
        if (joinable(g_, a, b, r_)) {
          a.insert(a.end(), b.begin(), b.end());
          commit(i, j, std::move(a));
          return true;
        }
        if (a.size() < r_ || b.size() < r_ || leftover_.empty()) continue;
        const OrderedClique from{{a.end() - static_cast<std::ptrdiff_t>(r_), a.end()}};
        const OrderedClique to{{b.begin(), b.begin() + static_cast<std::ptrdiff_t>(r_)}};
        VertexSet avoid = leftover_.complement();
        for (auto v : from.vertices) avoid.reset(v);
        for (auto v : to.vertices) avoid.reset(v);
        for (std::size_t t = 1; t <= params_.bridge_max && t <= leftover_.count(); ++t) {
          auto found = find_power_path(g_, static_cast<int>(r_), from, to, avoid, t, params_.tile_budget);
          if (!found.path) continue;
          const auto& seq = found.path->vertices;
          for (std::size_t p = r_; p + r_ < seq.size(); ++p) {
            a.push_back(seq[p]);
            leftover_.reset(seq[p]);
          }
          a.insert(a.end(), b.begin(), b.end());
          commit(i, j, std::move(a));
          return true;
        }
      }
    return false;
  }

  void commit(std::size_t i, std::size_t j, Path merged) {
    paths_[i] = std::move(merged);
    paths_.erase(paths_.begin() + static_cast<std::ptrdiff_t>(j));
  }

  bool merge_once() {
    for (std::size_t i = 0; i < paths_.size(); ++i)
      for (std::size_t j = i + 1; j < paths_.size(); ++j)
        if (merge_pair(i, j)) return true;
    return false;
  }

  const Graph& g_;
  std::size_t r_;
  const PipelineParams& params_;
  std::vector<Path>& paths_;
  VertexSet& leftover_;
  const std::vector<std::uint32_t>& rank_;
};

/// Exact maximum tile packing over a small vertex set.
std::optional<std::vector<Path>> exact_tiles(const augment::AugmentedGraph& h, int k, std::size_t m,
                                             const VertexSet& available, const std::vector<std::uint32_t>& rank,
                                             const SearchBudget& budget) {
  const auto local = available.to_vector();
  const auto w = local.size();
  std::vector<std::uint32_t> index_of(h.vertex_count(), 0);
  for (std::size_t i = 0; i < w; ++i) index_of[local[i]] = static_cast<std::uint32_t>(i);

  SearchBudget big = budget;
  if (big.node_cap) big.node_cap *= 50;
  detail::BudgetMeter meter(big);
  std::map<std::uint32_t, Path> tiles;
  TileSearch search(h, k, m, available, rank, meter);
  search.run([&](const std::vector<Vertex>& seq) {
    std::uint32_t mask = 0;
    for (auto v : seq) mask |= std::uint32_t{1} << index_of[v];
    tiles.emplace(mask, seq);
    return true;
  });
  if (meter.exhausted()) return std::nullopt;

  std::vector<std::vector<std::uint32_t>> by_min(w);
  for (const auto& [mask, seq] : tiles) by_min[static_cast<std::size_t>(__builtin_ctz(mask))].push_back(mask);
  const std::uint32_t full = w == 32 ? ~0U : ((std::uint32_t{1} << w) - 1);
  std::vector<std::int16_t> best(std::size_t{full} + 1, 0);
  std::vector<std::uint32_t> choice(std::size_t{full} + 1, 0);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const auto v = static_cast<std::size_t>(__builtin_ctz(mask));
    best[mask] = best[mask & (mask - 1)];
    for (auto t : by_min[v])
      if ((t & mask) == t && best[mask & ~t] + 1 > best[mask]) {
        best[mask] = static_cast<std::int16_t>(best[mask & ~t] + 1);
        choice[mask] = t;
      }
  }
  std::vector<Path> out;
  for (std::uint32_t mask = full; mask;) {
    if (choice[mask] && best[mask] == best[mask & ~choice[mask]] + 1) {
      out.push_back(tiles.at(choice[mask]));
      mask &= ~choice[mask];
    } else {
      mask &= mask - 1;
    }
  }
  return out;
}

}  // namespace

std::optional<std::vector<Vertex>> find_tile(const augment::AugmentedGraph& h, int k, std::size_t m,
                                             const VertexSet& available, const std::vector<std::uint32_t>& rank,
                                             const SearchBudget& budget) {
  require(k >= 0 && m >= 1, ErrorCode::invalid_argument, "tile needs k >= 0 and m >= 1");
  require(rank.size() == h.vertex_count(), ErrorCode::size_mismatch, "rank has the wrong length");
  detail::BudgetMeter meter(budget);
  std::optional<std::vector<Vertex>> found;
  TileSearch search(h, k, m, available, rank, meter);
  search.run([&](const std::vector<Vertex>& seq) {
    found = seq;
    return false;
  });
  return found;
}

CoverResult cover(const augment::AugmentedGraph& h, const VertexSet& q, const PipelineParams& params, Rng& rng) {
  const auto n = h.vertex_count();
  require(q.universe() == n, ErrorCode::size_mismatch, "Q has the wrong universe");
  const auto bounds = resolve(params, n);
  CoverResult out;
  out.family.leftover = VertexSet(n);

  std::vector<std::uint32_t> rank(n);
  std::iota(rank.begin(), rank.end(), 0U);
  rng.shuffle(rank);

  VertexSet available = q.complement();
  std::vector<Path> paths;
  if (available.count() <= kExactPackingLimit) {
    if (auto tiles = exact_tiles(h, params.k, params.m, available, rank, params.tile_budget)) {
      out.exact_packing = true;
      for (auto& t : *tiles) {
        for (auto v : t) available.reset(v);
        paths.push_back(std::move(t));
      }
    }
  }
  if (!out.exact_packing) {
    while (auto t = find_tile(h, params.k, params.m, available, rank, params.tile_budget)) {
      for (auto v : *t) available.reset(v);
      paths.push_back(std::move(*t));
    }
  }
  out.tiles = paths.size();

  VertexSet leftover = available;
  Fallback(h, params, paths, leftover, rank).run(std::max<std::size_t>(bounds.cover_path_cap, 1));

  for (auto& p : paths) out.family.paths.push_back(PowerSeq{std::move(p), params.k + 1, SeqKind::path});
  out.family.leftover = leftover;
  const auto left = leftover.count();
  if (out.family.paths.size() > bounds.cover_path_cap) {
    out.detail = std::to_string(out.family.paths.size()) + " paths, cap " + std::to_string(bounds.cover_path_cap);
  } else if (left > bounds.leftover_cap) {
    out.detail = std::to_string(left) + " uncovered vertices, cap " + std::to_string(bounds.leftover_cap);
  } else {
    out.ok = true;
  }
  return out;
}

}  // namespace hpl::absorb
