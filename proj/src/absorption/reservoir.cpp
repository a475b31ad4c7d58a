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
#include <limits>
#include <numeric>
#include <string>

#include "hpl/absorption.hpp"
#include "hpl/error.hpp"

namespace hpl::absorb {

bool reservoir_degree_ok(const Graph& g, const VertexSet& r, double fraction, std::size_t* worst) {
  const double need = fraction * static_cast<double>(r.count());
  std::size_t low = std::numeric_limits<std::size_t>::max();
  bool ok = true;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto c = g.neighbors(v).count_and(r);
    low = std::min(low, c);
    if (static_cast<double>(c) + 1e-9 < need) ok = false;
  }
  if (worst) *worst = g.vertex_count() == 0 ? 0 : low;
  return ok;
}

ReservoirResult build_reservoir(const Graph& g, const PipelineParams& params, Rng& rng) {
  const auto n = g.vertex_count();
  const auto bounds = resolve(params, n);
  const auto size = bounds.reservoir_size;
  require(size >= 1, ErrorCode::degenerate,
          "reservoir size floor(gamma^2 n) is 0 for gamma=" + std::to_string(params.gamma) +
              ", n=" + std::to_string(n));
  require(size <= n, ErrorCode::invalid_argument, "reservoir larger than the vertex set");

  ReservoirResult result;
  std::vector<Vertex> pool(n);
  std::iota(pool.begin(), pool.end(), Vertex{0});
  const int cap = std::max(1, params.retries.reservoir);
  for (int attempt = 1; attempt <= cap; ++attempt) {
    result.attempts = attempt;
    for (std::size_t i = 0; i < size; ++i) std::swap(pool[i], pool[i + rng.below(n - i)]);
    VertexSet r(n);
    for (std::size_t i = 0; i < size; ++i) r.set(pool[i]);
    if (reservoir_degree_ok(g, r, bounds.reservoir_degree_fraction, &result.worst_degree)) {
      result.reservoir = Reservoir{std::move(r), VertexSet(n), bounds.reservoir_use_cap};
      break;
    }
  }
  return result;
}

}  // namespace hpl::absorb
