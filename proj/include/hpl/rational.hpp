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

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace hpl {

using Rational = boost::rational<std::int64_t>;

/// Parses "3/4", "-2", "0.05" or "1e-3" exactly.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

inline double to_double(const Rational& r) {
  return boost::rational_cast<double>(r);
}

/// ceil(r) for any sign.
std::int64_t ceil(const Rational& r);
std::int64_t floor(const Rational& r);

}  // namespace hpl
