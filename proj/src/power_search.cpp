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

#include "hpl/power_search.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

#include "hpl/error.hpp"
#include "internal/budget.hpp"

namespace hpl {

std::string_view to_string(SearchOutcome outcome) {
  switch (outcome) {
    case SearchOutcome::found: return "found";
    case SearchOutcome::absent: return "absent";
    case SearchOutcome::budget_exhausted: return "budget_exhausted";
  }
  return "unknown";
}

namespace {

/// Candidates sorted by ascending degree into `pool`, then by index.
std::vector<Vertex> order_candidates(const Graph& h, const VertexSet& cand, const VertexSet& pool) {
  std::vector<std::pair<std::size_t, Vertex>> keyed;
  cand.for_each([&](Vertex v) { keyed.emplace_back(h.neighbors(v).count_and(pool), v); });
  std::sort(keyed.begin(), keyed.end());
  std::vector<Vertex> out;
  out.reserve(keyed.size());
  for (const auto& kv : keyed) out.push_back(kv.second);
  return out;
}

class CycleSearch {
 public:
  CycleSearch(const Graph& h, int r, detail::BudgetMeter& meter)
      : h_(h), r_(static_cast<std::size_t>(r)), n_(h.vertex_count()), meter_(meter), unplaced_(h.vertices()) {
    need_ = std::min(2 * r_, n_ - 1);
  }

  std::optional<std::vector<Vertex>> run() {
    for (Vertex v = 0; v < n_; ++v)
      if (h_.degree(v) < need_) return std::nullopt;
    place(0);
    if (extend(1)) return seq_;
    return std::nullopt;
  }

 private:
  void place(Vertex v) {
    seq_.push_back(v);
    unplaced_.reset(v);
  }
  void unplace() {
    unplaced_.set(seq_.back());
    seq_.pop_back();
  }

  // Every unplaced vertex must keep enough potential cycle neighbours among
  // the unplaced vertices and the two open ends of the prefix.
  bool feasible() const {
    VertexSet open = unplaced_;
    const std::size_t len = seq_.size();
    for (std::size_t j = 0; j < std::min(r_, len); ++j) open.set(seq_[j]);
    for (std::size_t j = len > r_ ? len - r_ : 0; j < len; ++j) open.set(seq_[j]);
    bool ok = true;
    unplaced_.for_each([&](Vertex u) {
      if (ok && h_.neighbors(u).count_and(open) < need_) ok = false;
    });
    return ok;
  }

  bool extend(std::size_t i) {
    if (i == n_) return true;
    if (!meter_.tick()) return false;
    VertexSet cand = unplaced_;
    for (std::size_t d = 1; d <= std::min(i, r_); ++d) cand &= h_.neighbors(seq_[i - d]);
    // Wrap-around: position i is within cyclic distance r of positions 0..i+r-n.
    if (i + r_ >= n_)
      for (std::size_t j = 0; j <= i + r_ - n_ && j < i; ++j) cand &= h_.neighbors(seq_[j]);
    if (cand.empty()) return false;
    for (Vertex v : order_candidates(h_, cand, unplaced_)) {
      if (i == n_ - 1 && v < seq_[1]) continue;  // reversal symmetry
      place(v);
      if (feasible() && extend(i + 1)) return true;
      unplace();
      if (meter_.exhausted()) return false;
    }
    return false;
  }

  const Graph& h_;
  std::size_t r_;
  std::size_t n_;
  std::size_t need_ = 0;
  detail::BudgetMeter& meter_;
  VertexSet unplaced_;
  std::vector<Vertex> seq_;
};

}  // namespace

CycleSearchResult find_power_ham_cycle(const Graph& h, int r, const SearchBudget& budget) {
  const auto n = h.vertex_count();
  require(r >= 1, ErrorCode::invalid_argument, "power must be at least 1");
  require(n >= static_cast<std::size_t>(r) + 2, ErrorCode::invalid_argument,
          "need n >= r+2, got n=" + std::to_string(n) + ", r=" + std::to_string(r));
  detail::BudgetMeter meter(budget);
  CycleSearch search(h, r, meter);
  auto order = search.run();
  CycleSearchResult result;
  result.nodes = meter.nodes();
  if (order) {
    result.outcome = SearchOutcome::found;
    result.certificate = CycleCertificate{std::move(*order), r};
  } else {
    result.outcome = meter.exhausted() ? SearchOutcome::budget_exhausted : SearchOutcome::absent;
  }
  return result;
}

bool verify_certificate(const Graph& h, const CycleCertificate& cert) {
  const auto n = h.vertex_count();
  if (cert.order.size() != n || cert.power < 0) return false;
  VertexSet seen(n);
  for (auto v : cert.order) {
    if (v >= n || seen.test(v)) return false;
    seen.set(v);
  }
  const auto r = static_cast<std::size_t>(cert.power);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t d = 1; d <= r; ++d) {
      const auto j = (i + d) % n;
      if (j == i) continue;
      if (!h.adjacent(cert.order[i], cert.order[j])) return false;
    }
  return true;
}

bool brute_force_oracle(const Graph& h, int r) {
  const auto n = h.vertex_count();
  require(n <= kBruteForceLimit, ErrorCode::too_large,
          "brute force oracle accepts n <= 9, got " + std::to_string(n));
  require(r >= 1, ErrorCode::invalid_argument, "power must be at least 1");
  require(n >= static_cast<std::size_t>(r) + 2, ErrorCode::invalid_argument, "need n >= r+2");
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  const auto window_ok = [&] {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t d = 1; d <= static_cast<std::size_t>(r); ++d) {
        const auto j = (i + d) % n;
        if (j != i && !h.adjacent(order[i], order[j])) return false;
      }
    return true;
  };
  do {
    if (window_ok()) return true;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return false;
}

namespace {

class PathSearch {
 public:
  PathSearch(const Graph& h, std::size_t r, std::vector<Vertex> seq, std::size_t internal, VertexSet available,
             std::vector<VertexSet> tail_req, detail::BudgetMeter& meter)
      : h_(h),
        r_(r),
        seq_(std::move(seq)),
        start_(seq_.size()),
        internal_(internal),
        available_(std::move(available)),
        tail_req_(std::move(tail_req)),
        meter_(meter) {}

  bool run() { return extend(start_); }
  std::vector<Vertex>& seq() { return seq_; }

 private:
  bool extend(std::size_t p) {
    if (p == start_ + internal_) return true;
    if (!meter_.tick()) return false;
    VertexSet cand = available_ & tail_req_[p - start_];
    for (std::size_t d = 1; d <= std::min(p, r_); ++d) cand &= h_.neighbors(seq_[p - d]);
    if (cand.empty()) return false;
    for (Vertex v : order_candidates(h_, cand, available_)) {
      seq_.push_back(v);
      available_.reset(v);
      if (extend(p + 1)) return true;
      available_.set(v);
      seq_.pop_back();
      if (meter_.exhausted()) return false;
    }
    return false;
  }

  const Graph& h_;
  std::size_t r_;
  std::vector<Vertex> seq_;
  std::size_t start_;
  std::size_t internal_;
  VertexSet available_;
  std::vector<VertexSet> tail_req_;
  detail::BudgetMeter& meter_;
};

}  // namespace

PathSearchResult find_power_path(const Graph& h, int r, const OrderedClique& from, const OrderedClique& to,
                                 const VertexSet& avoid, std::size_t internal_count, const SearchBudget& budget) {
  require(r >= 0, ErrorCode::invalid_argument, "power must be non-negative");
  const auto n = h.vertex_count();
  require(avoid.universe() == n, ErrorCode::size_mismatch, "avoid set has the wrong universe");
  VertexSet ends(n);
  for (const auto* tuple : {&from.vertices, &to.vertices})
    for (auto v : *tuple) {
      require(v < n, ErrorCode::invalid_argument, "end-set vertex out of range");
      require(!ends.test(v), ErrorCode::invalid_argument, "end-sets overlap or repeat a vertex");
      ends.set(v);
    }
  require(!avoid.intersects(ends), ErrorCode::invalid_argument, "avoid set meets an end-set");

  PathSearchResult result;
  const auto rr = static_cast<std::size_t>(r);
  const std::size_t a = from.order();
  const std::size_t b = to.order();
  const std::size_t total = a + internal_count + b;

  // Constraints among fixed vertices do not depend on the search.
  auto pos_vertex = [&](std::size_t p) { return p < a ? from.vertices[p] : to.vertices[p - a - internal_count]; };
  auto fixed = [&](std::size_t p) { return p < a || p >= a + internal_count; };
  for (std::size_t p = 0; p < total; ++p)
    for (std::size_t d = 1; d <= rr && p + d < total; ++d)
      if (fixed(p) && fixed(p + d) && !h.adjacent(pos_vertex(p), pos_vertex(p + d))) return result;

  std::vector<VertexSet> tail_req(internal_count, h.vertices());
  for (std::size_t i = 0; i < internal_count; ++i) {
    const std::size_t p = a + i;
    for (std::size_t q = a + internal_count; q < total && q - p <= rr; ++q) tail_req[i] &= h.neighbors(pos_vertex(q));
  }

  VertexSet available = h.vertices() - avoid - ends;
  detail::BudgetMeter meter(budget);
  PathSearch search(h, rr, from.vertices, internal_count, std::move(available), std::move(tail_req), meter);
  const bool ok = search.run();
  result.nodes = meter.nodes();
  if (ok) {
    auto seq = std::move(search.seq());
    seq.insert(seq.end(), to.vertices.begin(), to.vertices.end());
    result.outcome = SearchOutcome::found;
    result.path = PowerSeq{std::move(seq), r, SeqKind::path};
  } else {
    result.outcome = meter.exhausted() ? SearchOutcome::budget_exhausted : SearchOutcome::absent;
  }
  return result;
}

namespace {

void collect_cliques(const Graph& g, std::uint32_t cand, std::uint32_t cur, int remaining,
                     std::vector<std::uint32_t>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  while (cand) {
    const auto v = static_cast<Vertex>(__builtin_ctz(cand));
    cand &= cand - 1;
    std::uint32_t next = 0;
    g.neighbors(v).for_each([&](Vertex u) { next |= std::uint32_t{1} << u; });
    collect_cliques(g, cand & next, cur | (std::uint32_t{1} << v), remaining - 1, out);
  }
}

bool find_clique(const Graph& g, const VertexSet& cand, int remaining, std::vector<Vertex>& cur) {
  if (remaining == 0) return true;
  for (auto v : cand.to_vector()) {
    cur.push_back(v);
    VertexSet next = cand & g.neighbors(v);
    next.for_each([&](Vertex u) {
      if (u < v) next.reset(u);
    });
    if (find_clique(g, next, remaining - 1, cur)) return true;
    cur.pop_back();
  }
  return false;
}

}  // namespace

PackingResult max_disjoint_cliques(const Graph& g, int clique_size, std::size_t exact_limit) {
  require(clique_size >= 1, ErrorCode::invalid_argument, "clique size must be at least 1");
  const auto n = g.vertex_count();
  if (n <= std::min<std::size_t>(exact_limit, 20)) {
    // by_min[v]: cliques whose smallest vertex is v.
    std::vector<std::uint32_t> all;
    collect_cliques(g, n == 32 ? ~0U : ((std::uint32_t{1} << n) - 1), 0, clique_size, all);
    std::vector<std::vector<std::uint32_t>> by_min(n);
    for (auto c : all) by_min[static_cast<std::size_t>(__builtin_ctz(c))].push_back(c);

    std::vector<std::int16_t> memo(std::size_t{1} << n, -1);
    memo[0] = 0;
    // Subsets in increasing numeric order only depend on smaller subsets.
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
      const auto v = static_cast<std::size_t>(__builtin_ctz(mask));
      std::int16_t best = memo[mask & (mask - 1)];
      for (auto c : by_min[v])
        if ((c & mask) == c) best = std::max<std::int16_t>(best, static_cast<std::int16_t>(memo[mask & ~c] + 1));
      memo[mask] = best;
    }
    return {static_cast<std::size_t>(memo[(std::size_t{1} << n) - 1]), true};
  }

  VertexSet available = g.vertices();
  std::size_t count = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!available.test(v)) continue;
    std::vector<Vertex> clique{v};
    VertexSet cand = available & g.neighbors(v);
    cand.for_each([&](Vertex u) {
      if (u < v) cand.reset(u);
    });
    if (find_clique(g, cand, clique_size - 1, clique)) {
      for (auto u : clique) available.reset(u);
      ++count;
    }
  }
  return {count, false};
}

}  // namespace hpl
