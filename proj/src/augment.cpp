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

#include "hpl/augment.hpp"

#include <limits>

#include "hpl/error.hpp"
#include "hpl/rng.hpp"

namespace hpl::augment {

bool gnp_pair_included(std::size_t n, double p, std::uint64_t seed, Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  return bits_to_unit(counter_bits(seed, static_cast<std::uint64_t>(u) * n + v)) < p;
}

RandomPart sample_gnp(std::size_t n, double p, std::uint64_t seed) {
  require(p >= 0.0 && p <= 1.0, ErrorCode::invalid_argument, "edge probability must lie in [0,1]");
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (gnp_pair_included(n, p, seed, u, v)) b.add_edge(u, v);
  return {std::move(b).build(), p, seed, std::string(kRngVersion)};
}

namespace {

Graph union_of(const Graph& a, const Graph& b) {
  GraphBuilder out(a);
  for (const auto& e : b.edges()) out.add_edge(e.u, e.v);
  return std::move(out).build();
}

}  // namespace

AugmentedGraph::AugmentedGraph(Graph det, RandomPart rnd)
    : det_(std::move(det)), rnd_(std::move(rnd)) {
  require(det_.vertex_count() == rnd_.graph.vertex_count(), ErrorCode::size_mismatch,
          "deterministic part has " + std::to_string(det_.vertex_count()) + " vertices, random part has " +
              std::to_string(rnd_.graph.vertex_count()));
  union_ = union_of(det_, rnd_.graph);
}

AugmentedGraph make_union(const Graph& g, const RandomPart& r) { return AugmentedGraph(g, r); }

bool RandomPropertiesReport::all_pass() const {
  if (!edge_count.pass || !intersecting_pairs.pass || !reservoir_within_bound) return false;
  for (const auto& c : absorber_hits)
    if (!c.pass) return false;
  return true;
}

std::uint64_t ordered_intersecting_pairs(const Graph& g) {
  std::uint64_t total = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto d = static_cast<std::uint64_t>(g.degree(v));
    if (d >= 2) total += d * (d - 1);
  }
  return total;
}

RandomPropertiesReport check_random_properties(const AugmentedGraph& h, double c, double beta, double gamma,
                                               std::span<const Graph> bx, const VertexSet& reservoir) {
  const auto n = static_cast<double>(h.vertex_count());
  const Graph& rnd = h.rnd().graph;
  RandomPropertiesReport report;

  report.edge_count.observed = static_cast<double>(rnd.edge_count());
  report.edge_count.bound = c * n;
  report.edge_count.pass = report.edge_count.observed <= report.edge_count.bound;

  report.intersecting_pairs.observed = static_cast<double>(ordered_intersecting_pairs(rnd));
  report.intersecting_pairs.bound = 2.0 * c * c * n;
  report.intersecting_pairs.pass = report.intersecting_pairs.observed <= report.intersecting_pairs.bound;

  report.reservoir_within_bound = static_cast<double>(reservoir.count()) <= gamma * gamma * n;

  const double floor = beta * c * n / 4.0;
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t x = 0; x < bx.size(); ++x) {
    require(bx[x].vertex_count() == h.vertex_count(), ErrorCode::size_mismatch, "B_x has the wrong vertex count");
    std::size_t hits = 0;
    for (const auto& e : bx[x].edges())
      if (!reservoir.test(e.u) && !reservoir.test(e.v) && rnd.adjacent(e.u, e.v)) ++hits;
    PropertyCheck check{static_cast<double>(hits) >= floor, static_cast<double>(hits), floor};
    if (check.observed < worst) {
      worst = check.observed;
      report.worst_x = static_cast<Vertex>(x);
    }
    report.absorber_hits.push_back(check);
  }
  return report;
}

}  // namespace hpl::augment
