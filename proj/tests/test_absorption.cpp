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

#include <gtest/gtest.h>

#include <cmath>
#include <optional>
#include <random>

#include "hpl/absorption.hpp"
#include "hpl/augment.hpp"
#include "hpl/constructions.hpp"
#include "hpl/error.hpp"
#include "hpl/graph_ops.hpp"
#include "oracles.hpp"

namespace hpl::absorb {
namespace {

using augment::AugmentedGraph;
using augment::sample_gnp;

AugmentedGraph complete_both(std::size_t n) { return AugmentedGraph(Graph::complete(n), sample_gnp(n, 1.0, 1)); }

VertexSet range_set(std::size_t n, Vertex lo, Vertex hi) {
  VertexSet s(n);
  for (Vertex v = lo; v < hi; ++v) s.set(v);
  return s;
}

std::optional<ErrorCode> code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

TEST(Params, Lengths) {
  EXPECT_EQ(connector_length(0), 2u);
  EXPECT_EQ(connector_length(1), 8u);
  EXPECT_EQ(connector_length(2), 24u);
  EXPECT_EQ(kwalk_length(1), 4u);
  EXPECT_EQ(kwalk_length(2), 18u);
  EXPECT_EQ(kwalk_length(0), 0u);
}

TEST(Params, ResolveUsesFormulasWithoutOverrides) {
  PipelineParams p;
  p.k = 1;
  p.eps = 0.2;
  p.gamma = 0.1;
  p.C = 4;
  const auto b = resolve(p, 10000);
  EXPECT_EQ(b.reservoir_size, 100u);
  EXPECT_DOUBLE_EQ(b.reservoir_degree_fraction, 0.6);
  EXPECT_EQ(b.reservoir_use_cap, 5u);
  EXPECT_EQ(b.connector_internal, 8u);
  ASSERT_TRUE(b.q.has_value());
  EXPECT_NEAR(*b.q, std::pow(0.1, 1.5) / 4 / 1e8, 1e-20);
  EXPECT_EQ(b.absorbing_path_cap, 500u);
  EXPECT_EQ(b.leftover_cap, 100u);
  EXPECT_EQ(b.absorb_cap, 200u);
  EXPECT_DOUBLE_EQ(b.bx_threshold, 0.1 * 1e8);
  // 4^{k+2} = 64, and gamma = 0.1 > 0.2 / 64.
  EXPECT_FALSE(b.hierarchy_ok);
  p.gamma = 0.003;
  EXPECT_TRUE(resolve(p, 10000).hierarchy_ok);
}

TEST(Params, Presets) {
  const auto formula = preset("formula", 1, 100, 0.6);
  EXPECT_NEAR(formula.eps, 0.1, 1e-12);
  EXPECT_TRUE(resolve(formula, 100).hierarchy_ok);
  const auto desk = preset("desk", 1, 80, 0.58);
  EXPECT_EQ(desk.preset, "desk");
  EXPECT_FALSE(resolve(desk, 80).q.has_value());
  EXPECT_EQ(code_of([] { preset("fast", 1, 80, 0.6); }), ErrorCode::invalid_argument);
  EXPECT_EQ(code_of([] { desk_preset(2, 80, 0.8); }), ErrorCode::unsupported);
  EXPECT_EQ(code_of([] { preset("formula", 1, 80, 0.4); }), ErrorCode::invalid_argument);
}

TEST(Reservoir, CompleteGraphSucceedsFirstTime) {
  auto p = desk_preset(1, 40, 0.6);
  Rng rng(1);
  const auto res = build_reservoir(Graph::complete(40), p, rng);
  ASSERT_TRUE(res.reservoir.has_value());
  EXPECT_EQ(res.attempts, 1);
  EXPECT_EQ(res.reservoir->vertices.count(), *p.desk.reservoir_size);
  EXPECT_EQ(res.reservoir->used.count(), 0u);
}

TEST(Reservoir, DegreeInvariantHolds) {
  PipelineParams p;
  p.k = 1;
  p.eps = 0.05;
  p.gamma = 0.5;
  const auto g = construct::dense_host(100, Rational(4, 5), 4);
  Rng rng(2);
  const auto res = build_reservoir(g, p, rng);
  ASSERT_TRUE(res.reservoir.has_value());
  const auto& r = res.reservoir->vertices;
  EXPECT_EQ(r.count(), 25u);
  EXPECT_TRUE(reservoir_degree_ok(g, r, 0.525));
  for (Vertex v = 0; v < 100; ++v) EXPECT_GE(static_cast<double>(g.neighbors(v).count_and(r)), 0.525 * 25);
}

TEST(Reservoir, DegenerateAndOversized) {
  PipelineParams p;
  p.gamma = 0.01;
  Rng rng(3);
  EXPECT_EQ(code_of([&] { build_reservoir(Graph::complete(50), p, rng); }), ErrorCode::degenerate);
  p.desk.reservoir_size = 51;
  EXPECT_EQ(code_of([&] { build_reservoir(Graph::complete(50), p, rng); }), ErrorCode::invalid_argument);
}

TEST(Connect, ExactLengthAndAvoidance) {
  for (int k : {0, 1}) {
    PipelineParams p;
    p.k = k;
    const auto h = complete_both(20);
    OrderedClique from, to;
    for (int i = 0; i <= k; ++i) {
      from.vertices.push_back(static_cast<Vertex>(i));
      to.vertices.push_back(static_cast<Vertex>(2 + i));
    }
    const auto z = range_set(20, 4, 10);
    const auto c = connect(h, from, to, z, p, {20000, 0});
    ASSERT_EQ(c.status, ConnectStatus::ok);
    const auto& seq = c.path->vertices;
    ASSERT_EQ(seq.size(), connector_length(k) + 2 * static_cast<std::size_t>(k + 1));
    EXPECT_TRUE(is_power_seq(h.graph(), *c.path));
    for (auto v : seq) EXPECT_FALSE(z.test(v));
  }
}

TEST(Connect, RejectsWrongEnds) {
  PipelineParams p;
  p.k = 1;
  const auto h = complete_both(20);
  EXPECT_THROW(connect(h, {{0}}, {{2, 3}}, VertexSet(20), p, {}), Error);
  EXPECT_THROW(connect(h, {{0, 1}}, {{1, 3}}, VertexSet(20), p, {}), Error);
}

TEST(Connect, ThroughReservoirConsumesAndExhausts) {
  PipelineParams p;
  p.k = 1;
  const auto h = complete_both(30);
  Reservoir res{range_set(30, 10, 26), VertexSet(30), 16};
  for (std::size_t round = 1; round <= 2; ++round) {
    const auto c = connect_through_reservoir(h, {{0, 1}}, {{2, 3}}, res, p, {20000, 0});
    ASSERT_EQ(c.status, ConnectStatus::ok);
    const auto& seq = c.path->vertices;
    for (std::size_t i = 2; i + 2 < seq.size(); ++i) EXPECT_TRUE(res.vertices.test(seq[i]));
    EXPECT_EQ(res.used.count(), 8 * round);
  }
  EXPECT_EQ(connect_through_reservoir(h, {{0, 1}}, {{2, 3}}, res, p, {}).status, ConnectStatus::reservoir_exhausted);
}

TEST(Connect, ReservoirExhaustedWhenOverCapOrShort) {
  PipelineParams p;
  p.k = 1;
  const auto h = complete_both(30);
  Reservoir short_res{range_set(30, 10, 20), range_set(30, 10, 13), 10};
  EXPECT_EQ(connect_through_reservoir(h, {{0, 1}}, {{2, 3}}, short_res, p, {}).status,
            ConnectStatus::reservoir_exhausted);
  Reservoir over{range_set(30, 10, 30), range_set(30, 10, 12), 1};
  EXPECT_EQ(connect_through_reservoir(h, {{0, 1}}, {{2, 3}}, over, p, {}).status,
            ConnectStatus::reservoir_exhausted);
  EXPECT_EQ(over.used.count(), 2u);
}

// Brute force over every internal sequence, checking each vertex against
// its predecessor.
double brute_walks_k1(const oracle::Matrix& m, std::size_t a, std::size_t b, std::size_t internal) {
  const std::size_t n = m.size();
  std::vector<std::size_t> digits(internal, 0);
  double count = 0;
  for (;;) {
    std::vector<std::size_t> w{a};
    w.insert(w.end(), digits.begin(), digits.end());
    w.push_back(b);
    bool ok = true;
    for (std::size_t i = 1; i < w.size() && ok; ++i) ok = m[w[i - 1]][w[i]];
    if (ok) count += 1;
    std::size_t i = 0;
    while (i < internal && ++digits[i] == n) digits[i++] = 0;
    if (i == internal) break;
  }
  return count;
}

TEST(KWalks, K1CountsMatchBruteForce) {
  std::mt19937_64 gen(17);
  for (int t = 0; t < 10; ++t) {
    const auto m = oracle::random_matrix(8, 0.5, gen);
    const auto g = oracle::from_matrix(m);
    const auto a = static_cast<Vertex>(gen() % 8), b = static_cast<Vertex>(gen() % 8);
    const auto res = enumerate_kwalks(g, 1, {{a}}, {{b}}, 1000000);
    EXPECT_EQ(res.internal, 4u);
    EXPECT_DOUBLE_EQ(res.count, brute_walks_k1(m, a, b, 4));
    EXPECT_EQ(static_cast<double>(res.samples.size()), res.count);
    for (const auto& w : res.samples) EXPECT_TRUE(is_power_seq(g, w, 1, SeqKind::walk));
  }
}

TEST(KWalks, K2OnTriangleIsForced) {
  // Each vertex must differ from both predecessors, so the walk cycles 0 1 2.
  const auto g = Graph::complete(3);
  const auto res = enumerate_kwalks(g, 2, {{0, 1}}, {{2, 0}}, 10);
  ASSERT_EQ(res.internal, 18u);
  // Positions 0..21 carry i mod 3, so the last two are 21 mod 3 = 0 preceded by 2.
  EXPECT_EQ(res.exact_count, 1u);
  EXPECT_EQ(enumerate_kwalks(g, 2, {{0, 1}}, {{0, 1}}, 10).exact_count, 0u);
}

TEST(KWalks, RejectsUnsupportedK) {
  const auto g = Graph::complete(6);
  EXPECT_EQ(code_of([&] { enumerate_kwalks(g, 3, {{0, 1, 2}}, {{3, 4, 5}}, 1); }), ErrorCode::unsupported);
  EXPECT_EQ(code_of([&] { enumerate_kwalks(g, 0, {{}}, {{}}, 1); }), ErrorCode::invalid_argument);
}

// Ordered injective tuples outside R spanning P⁻ in det with a random middle pair.
double brute_absorbers(const oracle::Matrix& det, const oracle::Matrix& rnd, int k, const std::vector<bool>& in_r) {
  const std::size_t n = det.size();
  const auto len = static_cast<std::size_t>(2 * k + 2);
  std::vector<std::size_t> t(len, 0);
  double count = 0;
  for (;;) {
    bool ok = true;
    for (std::size_t i = 0; i < len && ok; ++i) {
      ok = !in_r[t[i]];
      for (std::size_t j = i + 1; j < len && ok; ++j) {
        ok = t[i] != t[j];
        const bool middle = i == static_cast<std::size_t>(k) && j == i + 1;
        if (ok && j - i <= static_cast<std::size_t>(k + 1) && !middle) ok = det[t[i]][t[j]];
      }
    }
    if (ok && rnd[t[static_cast<std::size_t>(k)]][t[static_cast<std::size_t>(k) + 1]]) count += 1;
    std::size_t i = 0;
    while (i < len && ++t[i] == n) t[i++] = 0;
    if (i == len) break;
  }
  return count;
}

TEST(Absorbers, CountMatchesBruteForce) {
  std::mt19937_64 gen(23);
  for (int t = 0; t < 12; ++t) {
    const int k = t % 2;
    const auto det = oracle::random_matrix(8, 0.7, gen);
    const auto rnd = oracle::random_matrix(8, 0.4, gen);
    std::vector<bool> in_r(8, false);
    in_r[gen() % 8] = true;
    const AugmentedGraph h(oracle::from_matrix(det), {oracle::from_matrix(rnd), 0.4, 0, ""});
    VertexSet r(8);
    for (Vertex v = 0; v < 8; ++v)
      if (in_r[v]) r.set(v);
    EXPECT_DOUBLE_EQ(count_absorbers(h, k, r), brute_absorbers(det, rnd, k, in_r)) << "k=" << k;
  }
}

TEST(Absorbers, TupleChecks) {
  const auto h = complete_both(10);
  const VertexSet r = range_set(10, 8, 10);
  EXPECT_TRUE(is_absorber(h, 1, {{0, 1, 2, 3}}, r));
  EXPECT_FALSE(is_absorber(h, 1, {{0, 1, 2, 8}}, r));
  EXPECT_FALSE(is_absorber(h, 1, {{0, 1, 2, 2}}, r));
  EXPECT_FALSE(is_absorber(h, 1, {{0, 1, 2}}, r));
  const AugmentedGraph no_rnd(Graph::complete(10), sample_gnp(10, 0.0, 1));
  EXPECT_FALSE(is_absorber(no_rnd, 1, {{0, 1, 2, 3}}, r));
  EXPECT_TRUE(is_x_absorber(h, {{0, 1, 2, 3}}, 5, XAdjacency::det));
  EXPECT_FALSE(is_x_absorber(h, {{0, 1, 2, 3}}, 2, XAdjacency::det));
}

TEST(AbsorberGraph, K0IsCliqueOnNeighbourhood) {
  const auto g = construct::dense_host(30, Rational(1, 2), 8);
  const AugmentedGraph h(g, sample_gnp(30, 0.0, 1));
  PipelineParams p;
  p.k = 0;
  p.beta = 0.5;
  for (Vertex x = 0; x < 30; x += 7) {
    const auto bx = build_absorber_graph(h, 0, x, VertexSet(30), p);
    const auto d = g.degree(x);
    EXPECT_EQ(bx.pairs.edge_count(), d * (d - 1) / 2);
    for (const auto& e : bx.pairs.edges()) EXPECT_TRUE(g.adjacent(x, e.u) && g.adjacent(x, e.v));
  }
  // An isolated vertex has an empty neighbourhood.
  const AugmentedGraph empty(Graph(6), sample_gnp(6, 0.0, 1));
  EXPECT_EQ(build_absorber_graph(empty, 0, 2, VertexSet(6), p).pairs.edge_count(), 0u);
}

TEST(AbsorberGraph, K1ThresholdOnCompleteGraph) {
  // In K_10 a pair inside N(x) has 7 common neighbours there, so 42 maps.
  const auto h = complete_both(10);
  PipelineParams p;
  p.k = 1;
  p.beta = 0.42;
  EXPECT_EQ(build_absorber_graph(h, 1, 0, VertexSet(10), p).pairs.edge_count(), 36u);
  p.beta = 0.43;
  EXPECT_EQ(build_absorber_graph(h, 1, 0, VertexSet(10), p).pairs.edge_count(), 0u);
}

TEST(Select, ZeroProbabilityIsRejected) {
  auto p = desk_preset(1, 20, 0.6);
  p.q = 0.0;
  p.retries.absorbers = 2;
  Rng rng(4);
  const auto sel = select_absorber_family(complete_both(20), range_set(20, 0, 2), p, rng);
  EXPECT_TRUE(sel.family.empty());
  EXPECT_FALSE(sel.accepted);
  EXPECT_EQ(sel.attempts, 2);
}

TEST(Select, KeepFirstYieldsDisjointAbsorbers) {
  auto p = desk_preset(1, 20, 0.6);
  p.q = 1.0;
  p.desk.family_target = 3;
  p.desk.family_cap = 3;
  const auto h = complete_both(20);
  const auto r = range_set(20, 0, 2);
  Rng rng(5);
  const auto sel = select_absorber_family(h, r, p, rng);
  ASSERT_TRUE(sel.accepted) << sel.detail;
  EXPECT_EQ(sel.family.size(), 3u);
  EXPECT_DOUBLE_EQ(sel.total_absorbers, 18.0 * 17 * 16 * 15);
  VertexSet seen(20);
  for (const auto& a : sel.family) {
    EXPECT_TRUE(is_absorber(h, 1, a, r));
    for (auto v : a.tuple) {
      EXPECT_FALSE(seen.test(v));
      seen.set(v);
    }
  }
}

TEST(AbsorbingPath, SingleAndChainedFamilies) {
  auto p = desk_preset(1, 30, 0.6);
  const auto h = complete_both(30);
  const auto r = range_set(30, 20, 30);
  const std::vector<Absorber> one{{{0, 1, 2, 3}}};
  const auto a1 = build_absorbing_path(h, r, one, p);
  ASSERT_TRUE(a1.path.has_value()) << a1.detail;
  EXPECT_EQ(a1.path->path.vertices, one[0].tuple);

  const std::vector<Absorber> two{{{0, 1, 2, 3}}, {{4, 5, 6, 7}}};
  const auto a2 = build_absorbing_path(h, r, two, p);
  ASSERT_TRUE(a2.path.has_value()) << a2.detail;
  const auto& path = a2.path->path;
  EXPECT_EQ(path.size(), 8u + connector_length(1));
  EXPECT_TRUE(is_power_seq(h.graph(), path));
  for (auto v : path.vertices) EXPECT_FALSE(r.test(v));
  ASSERT_EQ(a2.path->placements.size(), 2u);
  EXPECT_EQ(a2.path->placements[1], 4u + connector_length(1));

  EXPECT_FALSE(build_absorbing_path(h, r, {}, p).path.has_value());
  const std::vector<Absorber> overlap{{{0, 1, 2, 3}}, {{3, 4, 5, 6}}};
  EXPECT_THROW(build_absorbing_path(h, r, overlap, p), Error);
}

TEST(Absorb, InsertsIntoPowerPath) {
  auto p = desk_preset(1, 30, 0.6);
  const auto h = complete_both(30);
  const std::vector<Absorber> two{{{0, 1, 2, 3}}, {{4, 5, 6, 7}}};
  const auto a = build_absorbing_path(h, range_set(30, 20, 30), two, p);
  ASSERT_TRUE(a.path.has_value());

  const auto same = absorb(h, *a.path, VertexSet(30), p);
  ASSERT_TRUE(same.path.has_value());
  EXPECT_EQ(same.path->vertices, a.path->path.vertices);

  VertexSet u(30);
  u.set(25);
  u.set(26);
  const auto res = absorb(h, *a.path, u, p);
  ASSERT_TRUE(res.path.has_value());
  EXPECT_EQ(res.path->size(), a.path->path.size() + 2);
  EXPECT_TRUE(is_power_seq(h.graph(), *res.path));
  EXPECT_EQ(res.path->head(2), a.path->path.head(2));
  EXPECT_EQ(res.path->tail(2), a.path->path.tail(2));
  EXPECT_EQ(res.insertions.size(), 2u);

  // Three vertices cannot fit into two absorbers.
  u.set(27);
  const auto full = absorb(h, *a.path, u, p);
  EXPECT_FALSE(full.path.has_value());
  EXPECT_TRUE(full.unplaced.has_value());

  VertexSet bad(30);
  bad.set(0);
  EXPECT_THROW(absorb(h, *a.path, bad, p), Error);
}

void expect_valid_cover(const AugmentedGraph& h, const VertexSet& q, const CoverResult& c, std::size_t k) {
  const auto n = h.vertex_count();
  VertexSet seen = c.family.leftover;
  EXPECT_FALSE(seen.intersects(q));
  for (const auto& path : c.family.paths) {
    EXPECT_TRUE(is_power_seq(h.graph(), path));
    EXPECT_EQ(path.power, static_cast<int>(k + 1));
    for (auto v : path.vertices) {
      EXPECT_FALSE(seen.test(v));
      EXPECT_FALSE(q.test(v));
      seen.set(v);
    }
  }
  EXPECT_EQ(seen | q, VertexSet::full(n));
}

TEST(Cover, CompleteGraph) {
  auto p = desk_preset(1, 40, 0.6);
  const auto h = complete_both(40);
  Rng rng(6);
  const VertexSet q(40);
  const auto c = cover(h, q, p, rng);
  ASSERT_TRUE(c.ok) << c.detail;
  expect_valid_cover(h, q, c, 1);
  EXPECT_LE(c.family.leftover.count(), 3 * p.m - 1);
}

TEST(Cover, EverythingExcluded) {
  auto p = desk_preset(1, 40, 0.6);
  Rng rng(7);
  const auto c = cover(complete_both(40), VertexSet::full(40), p, rng);
  EXPECT_TRUE(c.family.paths.empty());
  EXPECT_EQ(c.family.leftover.count(), 0u);
}

TEST(Cover, RandomInstances) {
  constexpr std::size_t n = 80;
  auto p = desk_preset(1, n, 0.58);
  int ok = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const AugmentedGraph h(construct::dense_host(n, Rational(29, 50), derive_seed(30, s)),
                           sample_gnp(n, 40.0 / n, derive_seed(31, s)));
    const auto q = range_set(n, 0, 20);
    Rng rng(derive_seed(32, s));
    const auto c = cover(h, q, p, rng);
    if (!c.ok) continue;
    ++ok;
    expect_valid_cover(h, q, c, 1);
    EXPECT_LE(c.family.paths.size(), *p.desk.cover_path_cap);
    EXPECT_LE(c.family.leftover.count(), *p.desk.leftover_cap);
  }
  EXPECT_GE(ok, 18);
}

TEST(Assemble, ExtremalHostWithoutRandomEdgesFails) {
  const auto g = construct::extremal_graph({1, 24, Rational(1, 24)});
  auto p = desk_preset(1, 24, 0.5 + 1.0 / 24 - 1e-9);
  p.C = 0;
  const AugmentedGraph h(g, sample_gnp(24, 0.0, 1));
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    p.seed = seed;
    const auto res = assemble(h, p);
    EXPECT_FALSE(res.success());
    ASSERT_TRUE(res.failed_stage.has_value());
    EXPECT_FALSE(res.trace.empty());
  }
}

TEST(Assemble, RejectsHostBelowDegreeHypothesis) {
  auto p = desk_preset(1, 24, 0.6);
  const AugmentedGraph h(Graph::cycle(24), sample_gnp(24, 0.5, 1));
  EXPECT_EQ(code_of([&] { assemble(h, p); }), ErrorCode::precondition_violated);
}

TEST(Assemble, K0DenseHostsSucceed) {
  constexpr std::size_t n = 60;
  auto p = desk_preset(0, n, 0.55);
  int ok = 0;
  for (std::uint64_t s = 0; s < 5; ++s) {
    const AugmentedGraph h(construct::dense_host(n, Rational(11, 20), derive_seed(40, s)),
                           sample_gnp(n, 40.0 / n, derive_seed(41, s)));
    p.seed = derive_seed(42, s);
    const auto res = assemble(h, p);
    if (res.success()) {
      ++ok;
      EXPECT_TRUE(verify_certificate(h.graph(), *res.certificate));
      EXPECT_EQ(res.certificate->power, 1);
      EXPECT_FALSE(res.failed_stage.has_value());
    } else {
      EXPECT_TRUE(res.failed_stage.has_value());
    }
  }
  EXPECT_GE(ok, 4);
}

}  // namespace
}  // namespace hpl::absorb
