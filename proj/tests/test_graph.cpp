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

#include <random>
#include <sstream>

#include "hpl/constructions.hpp"
#include "hpl/error.hpp"
#include "hpl/graph.hpp"
#include "hpl/graph_ops.hpp"
#include "hpl/rational.hpp"
#include "hpl/rng.hpp"
#include "oracles.hpp"

namespace hpl {
namespace {

std::vector<Vertex> seq(std::initializer_list<Vertex> v) { return v; }

TEST(VertexSet, BasicOperations) {
  VertexSet a(130), b(130);
  a.set(0);
  a.set(64);
  a.set(129);
  b.set(64);
  b.set(100);
  EXPECT_EQ(a.count(), 3u);
  EXPECT_EQ((a & b).count(), 1u);
  EXPECT_EQ((a | b).count(), 4u);
  EXPECT_EQ((a - b).count(), 2u);
  EXPECT_EQ(a.count_and(b), 1u);
  EXPECT_TRUE(a.intersects(b));
  EXPECT_EQ(VertexSet::full(130).count(), 130u);
  EXPECT_EQ(a.complement().count(), 127u);
}

TEST(Graph, RejectsLoopsDuplicatesAndRange) {
  std::vector<Edge> loop{{1, 1}};
  std::vector<Edge> dup{{0, 1}, {1, 0}};
  std::vector<Edge> range{{0, 5}};
  EXPECT_THROW(Graph(3, loop), Error);
  EXPECT_THROW(Graph(3, dup), Error);
  EXPECT_THROW(Graph(3, range), Error);
}

TEST(Graph, SymmetricAndIrreflexive) {
  std::mt19937_64 gen(11);
  for (int t = 0; t < 20; ++t) {
    auto g = oracle::from_matrix(oracle::random_matrix(15, 0.4, gen));
    for (Vertex u = 0; u < 15; ++u) {
      EXPECT_FALSE(g.adjacent(u, u));
      EXPECT_LT(g.degree(u), 15u);
      for (Vertex v = 0; v < 15; ++v) EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
    }
  }
}

TEST(EdgeList, RoundTrip) {
  std::mt19937_64 gen(3);
  auto g = oracle::from_matrix(oracle::random_matrix(20, 0.3, gen));
  std::stringstream ss;
  write_edge_list(ss, g);
  EXPECT_EQ(read_edge_list(ss), g);
}

TEST(EdgeList, ReaderRejectsBadInput) {
  for (const char* text : {"3 1\n0 0\n", "3 2\n0 1\n1 0\n", "3 1\n0 3\n", "3 2\n0 1\n", "x\n", "3 1\n1 0\n"}) {
    std::stringstream ss(text);
    EXPECT_THROW(read_edge_list(ss), Error) << text;
  }
}

TEST(Power, ZeroIsEdgeless) {
  auto h = power(Graph::complete(6), 0);
  EXPECT_EQ(h.vertex_count(), 6u);
  EXPECT_EQ(h.edge_count(), 0u);
}

TEST(Power, SmallExamples) {
  EXPECT_EQ(power(Graph::cycle(5), 2), Graph::complete(5));
  EXPECT_EQ(power(Graph::path(5), 2).edge_count(), 7u);
}

TEST(Power, MatchesBfsOracle) {
  std::mt19937_64 gen(2024);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + gen() % 10;
    const double p = 0.1 + 0.5 * static_cast<double>(gen() % 100) / 100.0;
    const auto m = oracle::random_matrix(n, p, gen);
    const auto g = oracle::from_matrix(m);
    for (int k = 0; k <= 4; ++k) EXPECT_EQ(power(g, k), oracle::from_matrix(oracle::bfs_power(m, k)));
  }
}

TEST(Power, CyclePowerIsCompleteExactlyWhenSmall) {
  for (std::size_t n = 3; n <= 12; ++n)
    for (int k = 1; k <= 5; ++k)
      EXPECT_EQ(power(Graph::cycle(n), k) == Graph::complete(n), n <= static_cast<std::size_t>(2 * k + 1))
          << "n=" << n << " k=" << k;
}

TEST(JointNeighborhood, Conventions) {
  auto kn = Graph::complete(7);
  std::vector<Vertex> j{1, 4};
  auto nj = joint_neighborhood(kn, j);
  EXPECT_EQ(nj.count(), 5u);
  EXPECT_FALSE(nj.test(1));
  EXPECT_FALSE(nj.test(4));
  EXPECT_EQ(joint_neighborhood(kn, std::span<const Vertex>{}).count(), 7u);
}

TEST(JointNeighborhood, ExtremalMarkedVertex) {
  auto g = construct::extremal_graph({1, 12, Rational(1, 12)});
  std::vector<Vertex> w{construct::extremal_marked_vertices({1, 12, Rational(1, 12)}).front()};
  EXPECT_EQ(joint_neighborhood(g, w).count(), 11u);
}

TEST(JointNeighborhood, ShrinksWhenAddingVertices) {
  std::mt19937_64 gen(5);
  for (int t = 0; t < 50; ++t) {
    auto g = oracle::from_matrix(oracle::random_matrix(16, 0.6, gen));
    std::vector<Vertex> j;
    for (int s = 0; s < 4; ++s) {
      auto before = joint_neighborhood(g, j);
      j.push_back(static_cast<Vertex>(gen() % 16));
      EXPECT_TRUE(joint_neighborhood(g, j).is_subset_of(before));
    }
  }
}

TEST(Cliques, Examples) {
  EXPECT_EQ(min_degree(Graph::complete(4)), 3u);
  EXPECT_TRUE(is_clique(Graph::complete(4), seq({0, 1, 2})));
  EXPECT_FALSE(is_clique(Graph::cycle(5), seq({0, 1, 2})));
  EXPECT_TRUE(is_clique(Graph::cycle(5), seq({})));
}

TEST(PowerSeq, Examples) {
  EXPECT_TRUE(is_power_seq(Graph::complete(5), seq({0, 1, 2, 3, 4}), 2, SeqKind::path));
  EXPECT_FALSE(is_power_seq(Graph::path(5), seq({0, 1, 2, 3, 4}), 2, SeqKind::path));
  EXPECT_FALSE(is_power_seq(Graph::complete(5), seq({0, 1, 2, 0}), 1, SeqKind::path));
  // A walk may revisit a vertex once it is more than r steps back.
  EXPECT_TRUE(is_power_seq(Graph::complete(5), seq({0, 1, 2, 0}), 2, SeqKind::walk));
  EXPECT_FALSE(is_power_seq(Graph::complete(5), seq({0, 1, 0}), 2, SeqKind::walk));
}

TEST(PowerSeq, MatchesWindowOracle) {
  std::mt19937_64 gen(8);
  for (int t = 0; t < 300; ++t) {
    const auto m = oracle::random_matrix(8, 0.7, gen);
    const auto g = oracle::from_matrix(m);
    std::vector<std::size_t> order(8);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), gen);
    const int r = 1 + static_cast<int>(gen() % 3);
    std::vector<Vertex> s(order.begin(), order.end());
    EXPECT_EQ(is_power_seq(g, s, r, SeqKind::path), oracle::window_ok(m, order, r, false));
  }
}

TEST(JointNeighbourhoodBounds, CompleteGraphHasNoViolations) {
  for (int k = 0; k <= 2; ++k) {
    // Largest eps the hypothesis allows: delta(K_9) = 8 = (k/(k+1) + eps) 9.
    auto r = check_lemma31(Graph::complete(9), k, Rational(1, k + 1) - Rational(1, 9));
    EXPECT_TRUE(r.exhaustive);
    EXPECT_TRUE(r.violations.empty());
  }
}

TEST(JointNeighbourhoodBounds, ExtremalGraph) {
  auto g = construct::extremal_graph({1, 12, Rational(1, 12)});
  auto r = check_lemma31(g, 1, Rational(1, 12));
  EXPECT_TRUE(r.exhaustive);
  EXPECT_TRUE(r.violations.empty());
  // j = 1 and j = 2 sets.
  EXPECT_EQ(r.sets_checked, 12u + 66u);
}

TEST(JointNeighbourhoodBounds, PreconditionViolated) {
  try {
    check_lemma31(Graph::cycle(6), 1, parse_rational("0.1"));
    FAIL() << "expected precondition_violated";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::precondition_violated);
  }
}

TEST(JointNeighbourhoodBounds, SampledModeForLargeGraphs) {
  auto g = construct::dense_host(40, Rational(3, 4), 9);
  auto r = check_lemma31(g, 1, Rational(3, 4) - Rational(1, 2), 14, 500);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_TRUE(r.violations.empty());
}

TEST(Rational, Parsing) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-2"), Rational(-2));
  EXPECT_EQ(parse_rational("0.05"), Rational(1, 20));
  EXPECT_EQ(parse_rational("1e-3"), Rational(1, 1000));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
  EXPECT_EQ(ceil(Rational(7, 2)), 4);
  EXPECT_EQ(floor(Rational(-7, 2)), -4);
}

TEST(Rng, CounterStreamIsReproducible) {
  Rng a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    EXPECT_EQ(x, b());
    EXPECT_NE(x, c());
  }
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
}

TEST(Rng, BelowIsInRangeAndRoughlyUniform) {
  Rng rng(7);
  std::vector<int> counts(6, 0);
  for (int i = 0; i < 60000; ++i) {
    const auto x = rng.below(6);
    ASSERT_LT(x, 6u);
    ++counts[x];
  }
  for (int c : counts) EXPECT_NEAR(c, 10000, 500);
}

}  // namespace
}  // namespace hpl
