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

#pragma once

#include <span>
#include <string>

namespace hpl::bounds {

/// A probability bound with the exponent it came from. `log_bound` is the
/// natural logarithm of `bound`, kept so tiny bounds stay comparable.
struct BoundResult {
  double bound = 1.0;
  double log_bound = 0.0;
  double exponent = 0.0;
  std::string variant;
};

struct JansonPaperInput {
  double rho = 0;
  double p = 0;
  double n = 0;
  double c_f = 1.0;  // unspecified in the source statement; parametric
};

/// min(1, 2^{-c_F rho^2 p n^2}); exponent is c_F rho^2 p n^2 (base 2).
BoundResult janson_paper_bound(const JansonPaperInput& in);

struct JansonGenericInput {
  double lambda = 0;
  double delta_bar = 0;  // sum over ordered pairs of distinct overlapping copies
};

/// min(1, exp(-lambda + delta_bar / 2)).
BoundResult janson_generic_bound(const JansonGenericInput& in);

/// Lower tail exp(-t^2 mu / 2) for t in (0, 1).
BoundResult chernoff_hypergeometric(double mu, double t);

/// min(1, sum of parts); each part must lie in [0, 1].
double union_bound(std::span<const double> parts);

/// The augmentation constant 2 / (c_F rho^2) that makes the fixed-constant
/// bound at most 2^{-2n} when p = C/n.
double implied_c(double c_f, double rho);

}  // namespace hpl::bounds
