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

#include "hpl/prob_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hpl/error.hpp"

namespace hpl::bounds {

namespace {

BoundResult from_log(double log_bound, double exponent, std::string variant) {
  BoundResult out;
  out.log_bound = std::min(0.0, log_bound);
  out.bound = std::exp(out.log_bound);
  out.exponent = exponent;
  out.variant = std::move(variant);
  return out;
}

}  // namespace

BoundResult janson_paper_bound(const JansonPaperInput& in) {
  require(in.rho > 0, ErrorCode::invalid_argument, "rho must be positive");
  require(in.c_f > 0, ErrorCode::invalid_argument, "c_F must be positive");
  require(in.p >= 0 && in.p <= 1, ErrorCode::invalid_argument, "p must lie in [0,1]");
  require(in.n >= 0, ErrorCode::invalid_argument, "n must be non-negative");
  const double exponent = in.c_f * in.rho * in.rho * in.p * in.n * in.n;
  return from_log(-exponent * std::numbers::ln2, exponent, "fixed-constant: 2^(-c_F rho^2 p n^2), c_F parametric");
}

BoundResult janson_generic_bound(const JansonGenericInput& in) {
  require(in.lambda >= 0, ErrorCode::invalid_argument, "lambda must be non-negative");
  require(in.delta_bar >= 0, ErrorCode::invalid_argument, "delta_bar must be non-negative");
  const double exponent = in.lambda - in.delta_bar / 2;
  return from_log(-exponent, exponent, "generic: exp(-lambda + delta_bar/2)");
}

BoundResult chernoff_hypergeometric(double mu, double t) {
  require(mu >= 0, ErrorCode::invalid_argument, "mu must be non-negative");
  require(t > 0 && t < 1, ErrorCode::invalid_argument, "t must lie in (0,1)");
  const double exponent = t * t * mu / 2;
  return from_log(-exponent, exponent, "lower tail: exp(-t^2 mu/2)");
}

double union_bound(std::span<const double> parts) {
  double sum = 0;
  for (double p : parts) {
    require(p >= 0 && p <= 1, ErrorCode::invalid_argument, "union bound parts must lie in [0,1]");
    sum += p;
  }
  return std::min(1.0, sum);
}

double implied_c(double c_f, double rho) {
  require(c_f > 0 && rho > 0, ErrorCode::invalid_argument, "c_F and rho must be positive");
  return 2.0 / (c_f * rho * rho);
}

}  // namespace hpl::bounds
