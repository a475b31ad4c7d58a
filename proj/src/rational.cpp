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

#include "hpl/rational.hpp"

#include <charconv>
#include <string>

#include "hpl/error.hpp"

namespace hpl {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || begin == end)
    fail(ErrorCode::parse, "not a rational number: '" + std::string(whole) + "'");
  return value;
}

std::int64_t pow10(int e, std::string_view whole) {
  if (e > 18) fail(ErrorCode::parse, "too many decimal digits in '" + std::string(whole) + "'");
  std::int64_t p = 1;
  for (int i = 0; i < e; ++i) p *= 10;
  return p;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (text.empty()) fail(ErrorCode::parse, "empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = parse_int(text.substr(0, slash), whole);
    const auto den = parse_int(text.substr(slash + 1), whole);
    if (den == 0) fail(ErrorCode::parse, "zero denominator in '" + std::string(whole) + "'");
    return Rational(num, den);
  }

  int exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    exponent = static_cast<int>(parse_int(text.substr(e + 1), whole));
    text = text.substr(0, e);
  }
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string digits;
  int frac_digits = 0;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    digits = std::string(text.substr(0, dot)) + std::string(text.substr(dot + 1));
    frac_digits = static_cast<int>(text.size() - dot - 1);
  } else {
    digits = std::string(text);
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    fail(ErrorCode::parse, "not a rational number: '" + std::string(whole) + "'");
  const auto mantissa = parse_int(digits, whole);
  Rational r(negative ? -mantissa : mantissa);
  const int shift = exponent - frac_digits;
  if (shift > 0) r *= pow10(shift, whole);
  if (shift < 0) r /= pow10(-shift, whole);
  return r;
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t floor(const Rational& r) {
  const auto n = r.numerator();
  const auto d = r.denominator();  // boost keeps d > 0
  auto q = n / d;
  if ((n % d != 0) && (n < 0)) --q;
  return q;
}

std::int64_t ceil(const Rational& r) { return -floor(-r); }

}  // namespace hpl
