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

#include <chrono>
#include <string>

#include "hpl/absorption.hpp"
#include "hpl/error.hpp"

namespace hpl::absorb {

std::string_view to_string(Stage stage) {
  switch (stage) {
    case Stage::reservoir: return "reservoir";
    case Stage::absorbers: return "absorbers";
    case Stage::absorbing_path: return "absorbing_path";
    case Stage::cover: return "cover";
    case Stage::stitch: return "stitch";
    case Stage::absorb: return "absorb";
    case Stage::certificate: return "certificate";
  }
  return "unknown";
}

std::vector<int> AssembleResult::retries() const {
  std::vector<int> out(static_cast<std::size_t>(Stage::certificate) + 1, 0);
  for (const auto& e : trace) {
    auto& slot = out[static_cast<std::size_t>(e.stage)];
    slot = std::max(slot, e.attempt);
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Rng stage_rng(std::uint64_t seed, Stage stage, int attempt) {
  return Rng(derive_seed(derive_seed(seed, 0x5354414745ULL + static_cast<std::uint64_t>(stage)),
                         static_cast<std::uint64_t>(attempt)));
}

std::vector<Vertex> internals(const PowerSeq& connector, std::size_t ends) {
  return {connector.vertices.begin() + static_cast<std::ptrdiff_t>(ends),
          connector.vertices.end() - static_cast<std::ptrdiff_t>(ends)};
}

struct Stitched {
  std::vector<Vertex> cycle;  // starts with the absorbing path
  std::vector<PowerSeq> connectors;
  Reservoir reservoir;
  std::size_t used_before_last = 0;
};

std::optional<Stitched> stitch_once(const augment::AugmentedGraph& h, const AbsorbingPath& a,
                                    std::vector<PowerSeq> paths, Reservoir reservoir, const PipelineParams& params,
                                    std::string& detail) {
  const auto ends = static_cast<std::size_t>(params.k) + 1;
  std::vector<const PowerSeq*> order{&a.path};
  for (const auto& p : paths) order.push_back(&p);
  Stitched out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const PowerSeq& cur = *order[i];
    const PowerSeq& next = *order[(i + 1) % order.size()];
    out.used_before_last = reservoir.used.count();
    auto c = connect_through_reservoir(h, cur.tail(ends), next.head(ends), reservoir, params, params.stitch_budget);
    if (!c.path) {
      detail = "connection " + std::to_string(i + 1) + "/" + std::to_string(order.size()) + ": " +
               std::string(to_string(c.status));
      return std::nullopt;
    }
    out.cycle.insert(out.cycle.end(), cur.vertices.begin(), cur.vertices.end());
    const auto mid = internals(*c.path, ends);
    out.cycle.insert(out.cycle.end(), mid.begin(), mid.end());
    out.connectors.push_back(std::move(*c.path));
  }
  out.reservoir = std::move(reservoir);
  return out;
}

}  // namespace

AssembleResult assemble(const augment::AugmentedGraph& h, const PipelineParams& params) {
  const auto n = h.vertex_count();
  const int k = params.k;
  AssembleResult result;
  result.bounds = resolve(params, n);
  const auto& bounds = result.bounds;
  const double need = (static_cast<double>(k) / (k + 1) + params.eps) * static_cast<double>(n);
  require(static_cast<double>(min_degree(h.det())) + 1e-9 * static_cast<double>(n) >= need,
          ErrorCode::precondition_violated,
          "deterministic part has min degree " + std::to_string(min_degree(h.det())) + " < " + std::to_string(need));

  auto fail_at = [&](Stage stage, std::string detail) {
    result.failed_stage = stage;
    result.detail = std::move(detail);
    return result;
  };
  auto record = [&](Stage stage, int attempt, bool ok, std::string detail,
                    std::vector<std::pair<std::string, double>> sizes, Clock::time_point start) {
    result.trace.push_back({stage, attempt, ok, std::move(detail), std::move(sizes), millis_since(start)});
  };
  auto& art = result.artifacts;

  // Reservoir.
  auto t0 = Clock::now();
  Rng res_rng = stage_rng(params.seed, Stage::reservoir, 0);
  auto res = build_reservoir(h.det(), params, res_rng);
  record(Stage::reservoir, res.attempts, res.reservoir.has_value(), "",
         {{"size", static_cast<double>(bounds.reservoir_size)}, {"worst_degree", static_cast<double>(res.worst_degree)}},
         t0);
  if (!res.reservoir)
    return fail_at(Stage::reservoir, "no reservoir met the degree condition in " + std::to_string(res.attempts) +
                                         " samples (worst |N(v) ∩ R| = " + std::to_string(res.worst_degree) + ")");
  art.reservoir = *res.reservoir;
  const VertexSet& r = res.reservoir->vertices;

  // Absorber family and absorbing path, retried together.
  PipelineParams single = params;
  single.retries.absorbers = 1;
  std::string last_detail;
  Stage last_stage = Stage::absorbers;
  for (int attempt = 1; attempt <= std::max(1, params.retries.absorbers) && !art.absorbing_path; ++attempt) {
    t0 = Clock::now();
    Rng rng = stage_rng(params.seed, Stage::absorbers, attempt);
    auto sel = select_absorber_family(h, r, single, rng);
    record(Stage::absorbers, attempt, sel.accepted, sel.detail,
           {{"selected", static_cast<double>(sel.selected)},
            {"family", static_cast<double>(sel.family.size())},
            {"min_x_absorbers", static_cast<double>(sel.min_count)}},
           t0);
    if (!sel.accepted) {
      last_stage = Stage::absorbers;
      last_detail = sel.detail;
      continue;
    }
    t0 = Clock::now();
    auto built = build_absorbing_path(h, r, sel.family, params);
    record(Stage::absorbing_path, attempt, built.path.has_value(), built.detail,
           {{"vertices", built.path ? static_cast<double>(built.path->path.size()) : 0.0}}, t0);
    if (!built.path) {
      last_stage = Stage::absorbing_path;
      last_detail = built.detail;
      continue;
    }
    art.selection = std::move(sel);
    art.absorbing_path = std::move(built.path);
    art.absorbing_connectors = std::move(built.connectors);
  }
  if (!art.absorbing_path) return fail_at(last_stage, last_detail);
  const AbsorbingPath& a = *art.absorbing_path;

  // Cover V \ (R ∪ V(A)).
  VertexSet q = r;
  for (auto v : a.path.vertices) q.set(v);
  for (int attempt = 1; attempt <= std::max(1, params.retries.cover); ++attempt) {
    t0 = Clock::now();
    Rng rng = stage_rng(params.seed, Stage::cover, attempt);
    auto c = cover(h, q, params, rng);
    record(Stage::cover, attempt, c.ok, c.detail,
           {{"paths", static_cast<double>(c.family.paths.size())},
            {"tiles", static_cast<double>(c.tiles)},
            {"leftover", static_cast<double>(c.family.leftover.count())}},
           t0);
    if (c.ok) {
      art.cover = std::move(c.family);
      break;
    }
    last_detail = c.detail;
  }
  if (!art.cover) return fail_at(Stage::cover, last_detail);

  // Stitch A and the cover paths into one cycle through the reservoir.
  std::optional<Stitched> stitched;
  for (int attempt = 1; attempt <= std::max(1, params.retries.stitch) && !stitched; ++attempt) {
    t0 = Clock::now();
    auto paths = art.cover->paths;
    if (attempt > 1) {
      Rng rng = stage_rng(params.seed, Stage::stitch, attempt);
      rng.shuffle(paths);
      for (auto& p : paths)
        if (rng.below(2) == 1) std::reverse(p.vertices.begin(), p.vertices.end());
    }
    std::string detail;
    stitched = stitch_once(h, a, std::move(paths), *res.reservoir, params, detail);
    record(Stage::stitch, attempt, stitched.has_value(), detail,
           {{"connections", static_cast<double>(art.cover->paths.size() + 1)},
            {"reservoir_used", stitched ? static_cast<double>(stitched->reservoir.used.count()) : 0.0}},
           t0);
    last_detail = detail;
  }
  if (!stitched) return fail_at(Stage::stitch, last_detail);
  art.stitch_connectors = stitched->connectors;
  art.reservoir = stitched->reservoir;
  art.reservoir_used_before_last = stitched->used_before_last;

  // Absorb everything the cycle misses.
  t0 = Clock::now();
  VertexSet u = h.graph().vertices();
  for (auto v : stitched->cycle) u.reset(v);
  art.absorbed = u;
  if (u.count() > bounds.absorb_cap) {
    record(Stage::absorb, 1, false, "", {{"uncovered", static_cast<double>(u.count())}}, t0);
    return fail_at(Stage::absorb, std::to_string(u.count()) + " uncovered vertices, cap " +
                                      std::to_string(bounds.absorb_cap));
  }
  auto absorbed = absorb(h, a, u, params);
  record(Stage::absorb, 1, absorbed.path.has_value(), "", {{"uncovered", static_cast<double>(u.count())}}, t0);
  if (!absorbed.path)
    return fail_at(Stage::absorb, "no free x-absorber for vertex " + std::to_string(*absorbed.unplaced));
  art.absorbed_path = absorbed.path;

  std::vector<Vertex> order = absorbed.path->vertices;
  order.insert(order.end(), stitched->cycle.begin() + static_cast<std::ptrdiff_t>(a.path.size()),
               stitched->cycle.end());
  CycleCertificate cert{std::move(order), k + 1};
  t0 = Clock::now();
  const bool ok = verify_certificate(h.graph(), cert);
  record(Stage::certificate, 1, ok, "", {{"n", static_cast<double>(cert.order.size())}}, t0);
  if (!ok) return fail_at(Stage::certificate, "assembled order failed verification");
  result.certificate = std::move(cert);
  return result;
}

}  // namespace hpl::absorb
