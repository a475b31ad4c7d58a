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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace hpl {

using Vertex = std::uint32_t;

/// Fixed-universe bitset over {0..universe-1}. Adjacency rows and all vertex
/// subsets use this type so joint neighbourhoods are word-wise intersections.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  template <class Range>
  static VertexSet of(std::size_t universe, const Range& vertices) {
    VertexSet s(universe);
    for (auto v : vertices) s.set(static_cast<Vertex>(v));
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool test(Vertex v) const noexcept { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void set(Vertex v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(Vertex v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  void clear() noexcept {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// |this ∩ other| without materialising the intersection.
  std::size_t count_and(const VertexSet& other) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
  }

  bool intersects(const VertexSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const VertexSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  VertexSet& operator&=(const VertexSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  VertexSet& subtract(const VertexSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) noexcept { return a.subtract(b); }

  VertexSet complement() const {
    VertexSet c(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
    c.trim();
    return c;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  std::optional<Vertex> first() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i])
        return static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i])));
    return std::nullopt;
  }

  /// Calls f(v) for members in increasing order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(w));
        f(static_cast<Vertex>(i * 64 + bit));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

 private:
  void trim() noexcept {
    if (universe_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace hpl
