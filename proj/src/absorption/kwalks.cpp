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

#include <cmath>
#include <string>

#include "hpl/absorption.hpp"
#include "hpl/error.hpp"

namespace hpl::absorb {

namespace {

using Count = unsigned __int128;

struct WalkSpace {
  const Graph& g;
  std::size_t k;
  std::size_t n;
  std::size_t states;

  std::size_t encode(const std::vector<Vertex>& tail) const {
    std::size_t s = 0;
    for (auto v : tail) s = s * n + v;
    return s;
  }
  // Drops the oldest vertex and appends v.
  std::size_t shift(std::size_t s, Vertex v) const { return (s % (states / n)) * n + v; }
  VertexSet candidates(std::size_t s) const {
    VertexSet c = g.vertices();
    for (std::size_t i = 0; i < k; ++i) {
      c &= g.neighbors(static_cast<Vertex>(s % n));
      s /= n;
    }
    return c;
  }
};

}  // namespace

KWalkCount enumerate_kwalks(const Graph& g, int k, const OrderedClique& from, const OrderedClique& to,
                            std::size_t cap) {
  require(k >= 1, ErrorCode::invalid_argument, "k-walks need k >= 1");
  require(k <= 2, ErrorCode::unsupported,
          "k-walk enumeration is limited to k <= 2 (" + std::to_string(kwalk_length(k)) + " internal vertices)");
  const auto kk = static_cast<std::size_t>(k);
  require(from.order() == kk && to.order() == kk, ErrorCode::invalid_argument, "end-sets must be ordered k-tuples");
  const auto n = g.vertex_count();
  for (auto v : from.vertices) require(v < n, ErrorCode::invalid_argument, "vertex out of range");
  for (auto v : to.vertices) require(v < n, ErrorCode::invalid_argument, "vertex out of range");
  std::size_t states = 1;
  for (std::size_t i = 0; i < kk; ++i) states *= n;
  require(states <= (std::size_t{1} << 22), ErrorCode::too_large, "too many walk states");

  KWalkCount out;
  out.internal = kwalk_length(k);
  const std::size_t total = 2 * kk + out.internal;
  if (!is_power_seq(g, from.vertices, k, SeqKind::walk) || !is_power_seq(g, to.vertices, k, SeqKind::walk))
    return out;

  WalkSpace space{g, kk, n, states};
  const std::size_t first = kk - 1;  // position of the last vertex of `from`
  const std::size_t forced = kk + out.internal;
  // back[p - first][s]: completions once positions up to p are fixed and
  // the last k of them encode s.
  std::vector<std::vector<Count>> back(total - first, std::vector<Count>(states, 0));
  back[total - 1 - first][space.encode(to.vertices)] = 1;
  for (std::size_t p = total - 1; p-- > first;) {
    auto& cur = back[p - first];
    const auto& next = back[p + 1 - first];
    for (std::size_t s = 0; s < states; ++s) {
      Count sum = 0;
      const VertexSet cand = space.candidates(s);
      if (p + 1 >= forced) {
        const Vertex v = to.vertices[p + 1 - forced];
        if (cand.test(v)) sum = next[space.shift(s, v)];
      } else {
        cand.for_each([&](Vertex v) { sum += next[space.shift(s, v)]; });
      }
      cur[s] = sum;
    }
  }
  const std::size_t start = space.encode(from.vertices);
  out.exact_count = back[0][start];
  out.count = static_cast<double>(out.exact_count);
  out.density = out.count / std::pow(static_cast<double>(n), static_cast<double>(out.internal));

  std::vector<Vertex> walk = from.vertices;
  auto dfs = [&](auto&& self, std::size_t p, std::size_t s) -> void {
    if (out.samples.size() >= cap) return;
    if (p == total - 1) {
      out.samples.push_back(walk);
      return;
    }
    const VertexSet cand = space.candidates(s);
    cand.for_each([&](Vertex v) {
      if (out.samples.size() >= cap) return;
      if (p + 1 >= forced && v != to.vertices[p + 1 - forced]) return;
      const auto ns = space.shift(s, v);
      if (back[p + 1 - first][ns] == 0) return;
      walk.push_back(v);
      self(self, p + 1, ns);
      walk.pop_back();
    });
  };
  if (cap > 0 && out.exact_count > 0) dfs(dfs, first, start);
  return out;
}

}  // namespace hpl::absorb
