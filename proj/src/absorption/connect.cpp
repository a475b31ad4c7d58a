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

#include <string>

#include "hpl/absorption.hpp"
#include "hpl/error.hpp"

namespace hpl::absorb {

std::string_view to_string(ConnectStatus status) {
  switch (status) {
    case ConnectStatus::ok: return "ok";
    case ConnectStatus::absent: return "absent";
    case ConnectStatus::budget_exhausted: return "budget_exhausted";
    case ConnectStatus::reservoir_exhausted: return "reservoir_exhausted";
  }
  return "unknown";
}

namespace {

ConnectResult from_search(PathSearchResult&& found) {
  ConnectResult out;
  out.nodes = found.nodes;
  switch (found.outcome) {
    case SearchOutcome::found:
      out.status = ConnectStatus::ok;
      out.path = std::move(found.path);
      break;
    case SearchOutcome::absent: out.status = ConnectStatus::absent; break;
    case SearchOutcome::budget_exhausted: out.status = ConnectStatus::budget_exhausted; break;
  }
  return out;
}

void check_ends(const OrderedClique& from, const OrderedClique& to, int k) {
  const auto want = static_cast<std::size_t>(k + 1);
  require(from.order() == want && to.order() == want, ErrorCode::invalid_argument,
          "end-sets must be ordered (k+1)-tuples, got sizes " + std::to_string(from.order()) + " and " +
              std::to_string(to.order()));
}

}  // namespace

ConnectResult connect(const augment::AugmentedGraph& h, const OrderedClique& from, const OrderedClique& to,
                      const VertexSet& z, const PipelineParams& params, const SearchBudget& budget) {
  check_ends(from, to, params.k);
  return from_search(
      find_power_path(h.graph(), params.k + 1, from, to, z, connector_length(params.k), budget));
}

ConnectResult connect_through_reservoir(const augment::AugmentedGraph& h, const OrderedClique& from,
                                        const OrderedClique& to, Reservoir& res, const PipelineParams& params,
                                        const SearchBudget& budget) {
  check_ends(from, to, params.k);
  const auto l = connector_length(params.k);
  const VertexSet free = res.vertices - res.used;
  if (res.used.count() > res.use_cap || free.count() < l) {
    ConnectResult out;
    out.status = ConnectStatus::reservoir_exhausted;
    return out;
  }
  VertexSet avoid = free.complement();
  for (auto v : from.vertices) avoid.reset(v);
  for (auto v : to.vertices) avoid.reset(v);
  auto out = from_search(find_power_path(h.graph(), params.k + 1, from, to, avoid, l, budget));
  if (out.path) {
    const auto& seq = out.path->vertices;
    for (std::size_t i = from.order(); i + to.order() < seq.size(); ++i) res.used.set(seq[i]);
  }
  return out;
}

}  // namespace hpl::absorb
