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

#include <compare>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "hpl/vertex_set.hpp"

namespace hpl {

/// Largest vertex count the library accepts.
inline constexpr std::size_t kMaxVertices = 4096;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphBuilder;

/// Simple undirected graph on {0..n-1} stored as bit rows. Immutable once
/// built, so it can be shared freely between threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// Validating constructor: throws Error(invalid_argument) on loops,
  /// duplicates (in either orientation) and out-of-range endpoints.
  Graph(std::size_t n, std::span<const Edge> edges);

  static Graph complete(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph path(std::size_t n);

  std::size_t vertex_count() const noexcept { return rows_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const noexcept { return rows_[u].test(v); }
  const VertexSet& neighbors(Vertex v) const noexcept { return rows_[v]; }
  std::size_t degree(Vertex v) const noexcept { return rows_[v].count(); }

  VertexSet vertices() const { return VertexSet::full(vertex_count()); }
  VertexSet empty_set() const { return VertexSet(vertex_count()); }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  friend class GraphBuilder;
  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);
  explicit GraphBuilder(const Graph& start);

  /// Returns false if the edge was already present. Throws on loops or
  /// out-of-range endpoints.
  bool add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const noexcept { return graph_.rows_[u].test(v); }
  std::size_t degree(Vertex v) const noexcept { return graph_.rows_[v].count(); }
  const VertexSet& neighbors(Vertex v) const noexcept { return graph_.rows_[v]; }
  std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }

  Graph build() &&;

 private:
  Graph graph_;
};

/// Edge-list text format: "n m" then m lines "u v" with 0 <= u < v < n.
Graph read_edge_list(std::istream& in);
Graph read_edge_list(const std::filesystem::path& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list(const std::filesystem::path& path, const Graph& g);

}  // namespace hpl
