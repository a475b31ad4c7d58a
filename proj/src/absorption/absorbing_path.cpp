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
#include <string>

#include "hpl/absorption.hpp"
#include "hpl/error.hpp"

namespace hpl::absorb {

AbsorbingPathResult build_absorbing_path(const augment::AugmentedGraph& h, const VertexSet& reservoir,
                                         const std::vector<Absorber>& family, const PipelineParams& params) {
  const int k = params.k;
  const auto n = h.vertex_count();
  const auto bounds = resolve(params, n);
  AbsorbingPathResult out;
  if (family.empty()) {
    out.detail = "empty family";
    return out;
  }
  VertexSet family_vertices(n);
  for (const auto& a : family)
    for (auto v : a.tuple) {
      require(!family_vertices.test(v), ErrorCode::invalid_argument, "family absorbers overlap");
      family_vertices.set(v);
    }

  AbsorbingPath a;
  a.family = family;
  a.path.power = k + 1;
  a.path.kind = SeqKind::path;
  a.path.vertices = family[0].tuple;
  a.placements.push_back(0);
  VertexSet in_path = VertexSet::of(n, family[0].tuple);
  const auto ends = static_cast<std::size_t>(k + 1);

  for (std::size_t i = 1; i < family.size(); ++i) {
    const OrderedClique from = a.path.tail(ends);
    const OrderedClique to{{family[i].tuple.begin(), family[i].tuple.begin() + static_cast<std::ptrdiff_t>(ends)}};
    VertexSet z = reservoir | family_vertices | in_path;
    for (auto v : from.vertices) z.reset(v);
    for (auto v : to.vertices) z.reset(v);
    auto c = connect(h, from, to, z, params, params.connect_budget);
    if (!c.path) {
      out.detail = "connection " + std::to_string(i) + " failed: " + std::string(to_string(c.status));
      return out;
    }
    const auto& seq = c.path->vertices;
    for (std::size_t p = ends; p + ends < seq.size(); ++p) {
      a.path.vertices.push_back(seq[p]);
      in_path.set(seq[p]);
    }
    a.placements.push_back(a.path.vertices.size());
    for (auto v : family[i].tuple) {
      a.path.vertices.push_back(v);
      in_path.set(v);
    }
    out.connectors.push_back(std::move(*c.path));
  }
  if (a.path.size() > bounds.absorbing_path_cap) {
    out.detail = "absorbing path has " + std::to_string(a.path.size()) + " vertices, cap " +
                 std::to_string(bounds.absorbing_path_cap);
    return out;
  }
  out.path = std::move(a);
  return out;
}

namespace {

bool augment_from(std::size_t x, const std::vector<std::vector<std::size_t>>& options, std::vector<int>& owner,
                  std::vector<char>& seen) {
  for (auto f : options[x]) {
    if (seen[f]) continue;
    seen[f] = 1;
    if (owner[f] < 0 || augment_from(static_cast<std::size_t>(owner[f]), options, owner, seen)) {
      owner[f] = static_cast<int>(x);
      return true;
    }
  }
  return false;
}

}  // namespace

AbsorbResult absorb(const augment::AugmentedGraph& h, const AbsorbingPath& a, const VertexSet& u,
                    const PipelineParams& params) {
  const auto n = h.vertex_count();
  require(u.universe() == n, ErrorCode::size_mismatch, "U has the wrong universe");
  for (auto v : a.path.vertices)
    require(!u.test(v), ErrorCode::invalid_argument, "U meets the absorbing path at vertex " + std::to_string(v));

  const auto xs = u.to_vector();
  std::vector<std::vector<std::size_t>> options(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t f = 0; f < a.family.size(); ++f)
      if (is_x_absorber(h, a.family[f], xs[i], params.x_adjacency)) options[i].push_back(f);

  AbsorbResult out;
  std::vector<int> owner(a.family.size(), -1);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<char> seen(a.family.size(), 0);
    if (!augment_from(i, options, owner, seen)) {
      out.unplaced = xs[i];
      return out;
    }
  }

  for (std::size_t f = 0; f < owner.size(); ++f)
    if (owner[f] >= 0) out.insertions.emplace_back(xs[static_cast<std::size_t>(owner[f])], f);
  std::sort(out.insertions.begin(), out.insertions.end());

  // Insert back to front so earlier placements keep their offsets.
  std::vector<std::pair<std::size_t, Vertex>> at;
  for (const auto& [x, f] : out.insertions)
    at.emplace_back(a.placements[f] + static_cast<std::size_t>(params.k) + 1, x);
  std::sort(at.rbegin(), at.rend());
  PowerSeq path = a.path;
  for (const auto& [pos, x] : at) path.vertices.insert(path.vertices.begin() + static_cast<std::ptrdiff_t>(pos), x);
  out.path = std::move(path);
  return out;
}

}  // namespace hpl::absorb
