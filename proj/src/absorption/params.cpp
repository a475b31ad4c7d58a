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

std::size_t connector_length(int k) {
  require(k >= 0 && k < 30, ErrorCode::invalid_argument, "k out of range");
  return static_cast<std::size_t>(k + 1) << (k + 1);
}

std::size_t kwalk_length(int k) {
  require(k >= 0 && k < 30, ErrorCode::invalid_argument, "k out of range");
  return static_cast<std::size_t>(k + 1) * ((std::size_t{1} << (k + 1)) - 2);
}

namespace {

std::size_t floor_size(double x) { return x <= 0 ? 0 : static_cast<std::size_t>(std::floor(x + 1e-9)); }
std::size_t ceil_size(double x) { return x <= 0 ? 0 : static_cast<std::size_t>(std::ceil(x - 1e-9)); }

}  // namespace

ResolvedBounds resolve(const PipelineParams& p, std::size_t n) {
  require(p.k >= 0, ErrorCode::invalid_argument, "k must be non-negative");
  require(p.eps > 0 && p.eps < 1, ErrorCode::invalid_argument, "eps must lie in (0,1)");
  require(p.gamma > 0 && p.gamma < 1, ErrorCode::invalid_argument, "gamma must lie in (0,1)");
  require(p.C >= 0, ErrorCode::invalid_argument, "C must be non-negative");
  require(p.m >= 1, ErrorCode::invalid_argument, "m must be at least 1");
  const auto nd = static_cast<double>(n);
  const double g2 = p.gamma * p.gamma;
  const auto& d = p.desk;

  ResolvedBounds b;
  b.n = n;
  b.reservoir_size = d.reservoir_size.value_or(floor_size(g2 * nd));
  b.reservoir_degree_fraction =
      d.reservoir_degree_fraction.value_or(static_cast<double>(p.k) / (p.k + 1) + p.eps / 2);
  b.reservoir_use_cap = d.reservoir_use_fraction ? floor_size(*d.reservoir_use_fraction * b.reservoir_size)
                                                 : floor_size(p.eps * b.reservoir_size / 4);
  b.connector_internal = connector_length(p.k);
  if (p.q) {
    b.q = *p.q;
  } else if (!d.selection_target) {
    const double c = p.C > 0 ? p.C : 1.0;
    b.q = std::pow(p.gamma, 1.5) / c * std::pow(nd, -2.0 * p.k);
  }
  b.family_target = d.family_target;
  b.family_cap = d.family_cap.value_or(floor_size(3 * std::pow(p.gamma, 1.5) * nd));
  b.absorber_floor = d.absorber_floor.value_or(ceil_size(2 * g2 * nd));
  b.absorbing_path_cap = d.absorbing_path_fraction ? floor_size(*d.absorbing_path_fraction * nd)
                                                   : floor_size(p.gamma * nd / 2);
  b.cover_path_cap = d.cover_path_cap.value_or(floor_size(g2 * p.gamma * nd));
  b.leftover_cap = d.leftover_cap.value_or(floor_size(g2 * nd));
  b.absorb_cap = d.absorb_cap.value_or(floor_size(2 * g2 * nd));
  b.bx_threshold = p.beta * std::pow(nd, 2.0 * p.k) * d.bx_threshold_scale;
  b.hierarchy_ok = p.gamma < p.eps / std::pow(4.0, p.k + 2);
  return b;
}

PipelineParams desk_preset(int k, std::size_t n, double alpha) {
  require(k == 0 || k == 1, ErrorCode::unsupported, "desk presets exist for k = 0 and k = 1 only");
  require(n >= 20, ErrorCode::invalid_argument, "desk presets need n >= 20");
  PipelineParams p;
  p.k = k;
  p.eps = alpha - static_cast<double>(k) / (k + 1);
  require(p.eps > 0 && p.eps < 1, ErrorCode::invalid_argument, "alpha must exceed k/(k+1)");
  p.preset = "desk";
  p.x_adjacency = XAdjacency::union_graph;
  p.pruning = PruneRule::keep_first;
  const auto nd = static_cast<double>(n);
  const std::size_t l = connector_length(k);
  auto& d = p.desk;
  if (k == 0) {
    p.C = 40;
    p.gamma = 0.35;
    d.reservoir_size = 2 * l + 4;
    d.reservoir_degree_fraction = 0.2;
    d.reservoir_use_fraction = 1.0;
    d.selection_target = 40;
    d.family_target = std::max<std::size_t>(4, n / 10);
    d.family_cap = *d.family_target;
    d.absorber_floor = 1;
    d.absorbing_path_fraction = 0.5;
    d.cover_path_cap = 1;
    d.leftover_cap = 3;
    d.absorb_cap = 8;
  } else {
    p.C = 40;
    p.gamma = 0.45;
    d.reservoir_size = 2 * l + 2;
    d.reservoir_degree_fraction = 0.35;
    d.reservoir_use_fraction = 1.0;
    d.selection_target = 60;
    d.family_target = static_cast<std::size_t>(std::lround(nd / 16));
    d.family_cap = *d.family_target;
    d.absorber_floor = 0;
    d.absorbing_path_fraction = 0.7;
    d.cover_path_cap = 1;
    d.leftover_cap = 3;
    d.absorb_cap = 6;
  }
  p.beta = 0.05;
  d.bx_threshold_scale = 1.0;
  return p;
}

PipelineParams preset(std::string_view name, int k, std::size_t n, double alpha) {
  if (name == "desk") return desk_preset(k, n, alpha);
  if (name == "formula") {
    PipelineParams p;
    p.k = k;
    p.eps = alpha - static_cast<double>(k) / (k + 1);
    require(p.eps > 0 && p.eps < 1, ErrorCode::invalid_argument, "alpha must exceed k/(k+1)");
    p.gamma = p.eps / std::pow(4.0, k + 2) / 2;
    return p;
  }
  fail(ErrorCode::invalid_argument, "unknown preset '" + std::string(name) + "'");
}

}  // namespace hpl::absorb
