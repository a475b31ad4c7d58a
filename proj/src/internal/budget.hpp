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

#include <chrono>
#include <cstdint>

#include "hpl/power_search.hpp"

namespace hpl::detail {

/// Node and wall-clock accounting for one search. The clock is read only
/// every 4096 nodes.
class BudgetMeter {
 public:
  explicit BudgetMeter(const SearchBudget& budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  /// Counts one node; returns false once the budget is spent.
  bool tick() {
    if (exhausted_) return false;
    ++nodes_;
    if (budget_.node_cap != 0 && nodes_ > budget_.node_cap) exhausted_ = true;
    if (budget_.time_cap_seconds > 0 && (nodes_ & 4095U) == 0 && elapsed_seconds() > budget_.time_cap_seconds)
      exhausted_ = true;
    return !exhausted_;
  }

  bool exhausted() const noexcept { return exhausted_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

  double elapsed_seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace hpl::detail
