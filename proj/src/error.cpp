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

#include "hpl/error.hpp"

namespace hpl {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::io: return "io-failure";
    case ErrorCode::parse: return "parse-error";
    case ErrorCode::precondition_violated: return "precondition-violated";
    case ErrorCode::infeasible: return "infeasible";
    case ErrorCode::invalid_spec: return "invalid-spec";
    case ErrorCode::size_mismatch: return "size-mismatch";
    case ErrorCode::too_large: return "too-large";
    case ErrorCode::unsupported: return "unsupported";
    case ErrorCode::degenerate: return "degenerate";
    case ErrorCode::bracket_invalid: return "bracket-invalid";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

}  // namespace hpl
