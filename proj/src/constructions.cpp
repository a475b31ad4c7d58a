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

#include "hpl/constructions.hpp"

#include <algorithm>
#include <string>

#include "hpl/error.hpp"
#include "hpl/rng.hpp"

namespace hpl::construct {

std::size_t ExtremalSpec::marked_size() const {
  return static_cast<std::size_t>(ceil(eps * static_cast<std::int64_t>(n)));
}

void ExtremalSpec::validate() const {
  require(k >= 0, ErrorCode::invalid_spec, "k must be non-negative");
  require(n > 0 && n % static_cast<std::size_t>(k + 1) == 0, ErrorCode::invalid_spec,
          "n=" + std::to_string(n) + " is not divisible by k+1=" + std::to_string(k + 1));
  require(eps > 0 && eps < 1, ErrorCode::invalid_spec, "eps must lie in (0,1), got " + to_string(eps));
  require(marked_size() <= part_size(), ErrorCode::invalid_spec,
          "ceil(eps n)=" + std::to_string(marked_size()) + " exceeds the part size " + std::to_string(part_size()));
}

Graph extremal_graph(const ExtremalSpec& spec) {
  spec.validate();
  const auto s = spec.part_size();
  const auto w = spec.marked_size();
  GraphBuilder b(spec.n);
  for (Vertex u = 0; u < spec.n; ++u) {
    for (Vertex v = u + 1; v < spec.n; ++v) {
      const auto pu = u / s;
      const auto pv = v / s;
      if (pu != pv) {
        b.add_edge(u, v);
      } else {
        const bool u_marked = (u % s) < w;
        const bool v_marked = (v % s) < w;
        if (u_marked != v_marked) b.add_edge(u, v);
      }
    }
  }
  return std::move(b).build();
}

std::vector<Vertex> extremal_marked_vertices(const ExtremalSpec& spec) {
  spec.validate();
  std::vector<Vertex> out;
  const auto s = spec.part_size();
  for (std::size_t part = 0; part <= static_cast<std::size_t>(spec.k); ++part)
    for (std::size_t i = 0; i < spec.marked_size(); ++i) out.push_back(static_cast<Vertex>(part * s + i));
  return out;
}

Graph pminus(int k) {
  require(k >= 0, ErrorCode::invalid_argument, "k must be non-negative");
  const auto size = static_cast<Vertex>(2 * k + 2);
  const auto reach = static_cast<Vertex>(k + 1);
  GraphBuilder b(size);
  for (Vertex u = 0; u < size; ++u)
    for (Vertex v = u + 1; v < size && v - u <= reach; ++v)
      if (!(u == static_cast<Vertex>(k) && v == static_cast<Vertex>(k + 1))) b.add_edge(u, v);
  return std::move(b).build();
}

std::vector<int> pminus_coloring(int k) {
  require(k >= 0, ErrorCode::invalid_argument, "k must be non-negative");
  std::vector<int> colour(static_cast<std::size_t>(2 * k + 2));
  for (int i = 1; i <= 2 * k + 2; ++i) {
    int c;
    if (i <= k + 1)
      c = i;
    else if (i == k + 2)
      c = k + 1;
    else
      c = i - k - 2;
    colour[static_cast<std::size_t>(i - 1)] = c;
  }
  return colour;
}

Graph blowup_kminus(int k, std::size_t m) {
  require(k >= 0, ErrorCode::invalid_argument, "k must be non-negative");
  require(m >= 1, ErrorCode::invalid_argument, "blow-up size must be at least 1");
  const auto classes = static_cast<std::size_t>(k + 2);
  GraphBuilder b(classes * m);
  for (std::size_t c1 = 0; c1 < classes; ++c1)
    for (std::size_t c2 = c1 + 1; c2 < classes; ++c2) {
      if (c1 == 0 && c2 == 1) continue;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          b.add_edge(static_cast<Vertex>(c1 * m + i), static_cast<Vertex>(c2 * m + j));
    }
  return std::move(b).build();
}

Graph dense_host(std::size_t n, const Rational& alpha, std::uint64_t seed) {
  require(alpha > 0 && alpha < 1, ErrorCode::invalid_argument, "alpha must lie in (0,1), got " + to_string(alpha));
  const auto target = static_cast<std::size_t>(ceil(alpha * static_cast<std::int64_t>(n)));
  require(target < n, ErrorCode::infeasible,
          "ceil(alpha n)=" + std::to_string(target) + " is not below n=" + std::to_string(n));

  const double density = std::min(1.0, to_double(alpha) + kDenseHostSlack);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (bits_to_unit(counter_bits(seed, static_cast<std::uint64_t>(u) * n + v)) < density) b.add_edge(u, v);

  for (Vertex v = 0; v < n; ++v)
    for (Vertex w = 0; w < n && b.degree(v) < target; ++w)
      if (w != v) b.add_edge(v, w);
  return std::move(b).build();
}

}  // namespace hpl::construct
