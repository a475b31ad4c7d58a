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

#include "hpl/constructions.hpp"
#include "hpl/error.hpp"
#include "hpl/graph_ops.hpp"
#include "hpl/power_search.hpp"
#include "oracles.hpp"

namespace hpl::construct {
namespace {

std::size_t ceil_eps_n(const Rational& eps, std::size_t n) {
  return static_cast<std::size_t>(hpl::ceil(eps * static_cast<std::int64_t>(n)));
}

TEST(Extremal, DegreesMatchClosedForm) {
  for (int k = 0; k <= 3; ++k)
    for (std::size_t n = static_cast<std::size_t>(k + 1); n <= 24; n += static_cast<std::size_t>(k + 1))
      for (std::int64_t den : {5, 7, 12, 24}) {
        ExtremalSpec spec{k, n, Rational(1, den)};
        const auto s = n / static_cast<std::size_t>(k + 1);
        const auto w = ceil_eps_n(spec.eps, n);
        if (w > s) {
          EXPECT_THROW(extremal_graph(spec), Error);
          continue;
        }
        const auto g = extremal_graph(spec);
        const auto marked = extremal_marked_vertices(spec);
        ASSERT_EQ(marked.size(), (k + 1) * w);
        VertexSet in_w(n);
        for (auto v : marked) in_w.set(v);
        for (Vertex v = 0; v < n; ++v)
          EXPECT_EQ(g.degree(v), in_w.test(v) ? n - s + (s - w) : n - s + w) << "k=" << k << " n=" << n;
      }
}

TEST(Extremal, K1N12) {
  const auto g = extremal_graph({1, 12, Rational(1, 12)});
  EXPECT_EQ(min_degree(g), 7u);
  EXPECT_TRUE(satisfies_degree_hypothesis(g, 1, Rational(1, 12)));
  const auto packing = max_disjoint_cliques(g, 3);
  EXPECT_TRUE(packing.exact);
  EXPECT_EQ(packing.size, 2u);
}

TEST(Extremal, RejectsIndivisibleN) {
  try {
    extremal_graph({1, 13, Rational(1, 13)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_spec);
  }
}

// For k = 0 the construction has a single part, so it is the star from the
// marked vertex to the rest: K_{1,5} for n = 6, eps = 1/6. It has no
// Hamiltonian cycle.
TEST(Extremal, K0IsAStar) {
  const auto g = extremal_graph({0, 6, Rational(1, 6)});
  EXPECT_EQ(g.edge_count(), 5u);
  EXPECT_EQ(g.degree(0), 5u);
  for (Vertex v = 1; v < 6; ++v) EXPECT_EQ(g.degree(v), 1u);
  const auto res = find_power_ham_cycle(g, 1);
  EXPECT_EQ(res.outcome, SearchOutcome::absent);
  EXPECT_FALSE(oracle::has_power_cycle(oracle::to_matrix(g), 1));
}

TEST(Extremal, NoPowerCycleWhenMarkedSetsAreSmall) {
  int checked = 0;
  for (int k = 0; k <= 2; ++k)
    for (std::size_t n = static_cast<std::size_t>(k + 3); n <= 12; ++n) {
      if (n % static_cast<std::size_t>(k + 1) != 0) continue;
      for (std::size_t w = 1; w <= n; ++w) {
        // w < floor(n/(k+2)) / (k+1)
        if (w * static_cast<std::size_t>(k + 1) >= n / static_cast<std::size_t>(k + 2)) break;
        const auto g = extremal_graph({k, n, Rational(static_cast<std::int64_t>(w), static_cast<std::int64_t>(n))});
        EXPECT_EQ(find_power_ham_cycle(g, k + 1).outcome, SearchOutcome::absent) << "k=" << k << " n=" << n;
        ++checked;
      }
    }
  EXPECT_GT(checked, 0);
}

TEST(Pminus, SmallCases) {
  const auto p0 = pminus(0);
  EXPECT_EQ(p0.vertex_count(), 2u);
  EXPECT_EQ(p0.edge_count(), 0u);
  const auto p1 = pminus(1);
  ASSERT_EQ(p1.vertex_count(), 4u);
  EXPECT_EQ(p1, Graph(4, std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  EXPECT_FALSE(p1.adjacent(1, 2));
  EXPECT_EQ(p1.edge_count(), 4u);
}

TEST(Pminus, EdgeCountFromPower) {
  for (int k = 0; k <= 5; ++k) {
    const auto n = static_cast<std::size_t>(2 * k + 2);
    const auto full = power(Graph::path(n), k + 1);
    const auto pm = pminus(k);
    EXPECT_EQ(pm.edge_count(), full.edge_count() - 1);
    EXPECT_FALSE(pm.adjacent(static_cast<Vertex>(k), static_cast<Vertex>(k + 1)));
  }
}

TEST(Pminus, ColoringIsProperAndMatchesClosedForm) {
  for (int k = 0; k <= 5; ++k) {
    const auto phi = pminus_coloring(k);
    ASSERT_EQ(phi.size(), static_cast<std::size_t>(2 * k + 2));
    for (int i = 1; i <= 2 * k + 2; ++i) {
      const int expected = i <= k + 1 ? i : (i == k + 2 ? k + 1 : i - k - 2);
      EXPECT_EQ(phi[static_cast<std::size_t>(i - 1)], expected);
    }
    const auto g = pminus(k);
    for (const auto& e : g.edges()) EXPECT_NE(phi[e.u], phi[e.v]) << "k=" << k;
  }
}

TEST(Blowup, EdgeCounts) {
  EXPECT_EQ(blowup_kminus(0, 1).edge_count(), 0u);
  EXPECT_EQ(blowup_kminus(0, 1).vertex_count(), 2u);
  const auto p3 = blowup_kminus(1, 1);
  EXPECT_EQ(p3.edge_count(), 2u);
  EXPECT_FALSE(p3.adjacent(0, 1));
  EXPECT_EQ(blowup_kminus(1, 2).edge_count(), 8u);
  for (int k = 0; k <= 4; ++k)
    for (std::size_t m = 1; m <= 3; ++m) {
      const auto r = static_cast<std::size_t>(k + 2);
      EXPECT_EQ(blowup_kminus(k, m).edge_count(), (r * (r - 1) / 2 - 1) * m * m);
    }
}

TEST(DenseHost, MinDegreeAndDeterminism) {
  const auto g = dense_host(60, Rational(11, 20), 1);
  EXPECT_GE(min_degree(g), 33u);
  EXPECT_EQ(g, dense_host(60, Rational(11, 20), 1));
  EXPECT_NE(g, dense_host(60, Rational(11, 20), 2));
}

TEST(DenseHost, NearOneGivesComplete) {
  EXPECT_EQ(dense_host(10, Rational(89, 100), 5), Graph::complete(10));
}

TEST(DenseHost, Infeasible) {
  try {
    dense_host(10, Rational(19, 20), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::infeasible);
  }
}

}  // namespace
}  // namespace hpl::construct
