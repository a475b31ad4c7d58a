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

#include "hpl/graph.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "hpl/error.hpp"

namespace hpl {

namespace {

void check_size(std::size_t n) {
  require(n <= kMaxVertices, ErrorCode::too_large,
          "graph has " + std::to_string(n) + " vertices; the cap is " + std::to_string(kMaxVertices));
}

void check_endpoints(std::size_t n, Vertex u, Vertex v) {
  require(u < n && v < n, ErrorCode::invalid_argument,
          "edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range for n=" + std::to_string(n));
  require(u != v, ErrorCode::invalid_argument, "self-loop at vertex " + std::to_string(u));
}

}  // namespace

Graph::Graph(std::size_t n) {
  check_size(n);
  rows_.assign(n, VertexSet(n));
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& e : edges) {
    check_endpoints(n, e.u, e.v);
    require(!rows_[e.u].test(e.v), ErrorCode::invalid_argument,
            "duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    rows_[e.u].set(e.v);
    rows_[e.v].set(e.u);
    ++edge_count_;
  }
}

Graph Graph::complete(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph Graph::cycle(std::size_t n) {
  GraphBuilder b(n);
  if (n >= 3)
    for (Vertex u = 0; u < n; ++u) b.add_edge(u, static_cast<Vertex>((u + 1) % n));
  else if (n == 2)
    b.add_edge(0, 1);
  return std::move(b).build();
}

Graph Graph::path(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u + 1 < n; ++u) b.add_edge(u, u + 1);
  return std::move(b).build();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < rows_.size(); ++u)
    rows_[u].for_each([&](Vertex v) {
      if (u < v) out.push_back({u, v});
    });
  return out;
}

GraphBuilder::GraphBuilder(std::size_t n) : graph_(n) {}
GraphBuilder::GraphBuilder(const Graph& start) : graph_(start) {}

bool GraphBuilder::add_edge(Vertex u, Vertex v) {
  check_endpoints(graph_.vertex_count(), u, v);
  if (graph_.rows_[u].test(v)) return false;
  graph_.rows_[u].set(v);
  graph_.rows_[v].set(u);
  ++graph_.edge_count_;
  return true;
}

Graph GraphBuilder::build() && { return std::move(graph_); }

Graph read_edge_list(std::istream& in) {
  std::string line;
  auto next_line = [&](const char* what) {
    do {
      if (!std::getline(in, line)) fail(ErrorCode::parse, std::string("unexpected end of input reading ") + what);
    } while (line.find_first_not_of(" \t\r") == std::string::npos);
  };

  next_line("header");
  std::istringstream header(line);
  long long n = -1, m = -1;
  std::string rest;
  if (!(header >> n >> m) || (header >> rest) || n < 0 || m < 0)
    fail(ErrorCode::parse, "malformed header line '" + line + "', expected 'n m'");
  check_size(static_cast<std::size_t>(n));

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    next_line("edge");
    std::istringstream row(line);
    long long u = -1, v = -1;
    if (!(row >> u >> v) || (row >> rest))
      fail(ErrorCode::parse, "malformed edge line " + std::to_string(i + 2) + ": '" + line + "'");
    if (u < 0 || v < 0 || u >= n || v >= n)
      fail(ErrorCode::parse, "edge line " + std::to_string(i + 2) + " has an endpoint outside [0, n)");
    if (u == v) fail(ErrorCode::parse, "edge line " + std::to_string(i + 2) + " is a loop");
    if (u > v) fail(ErrorCode::parse, "edge line " + std::to_string(i + 2) + " is not ordered u < v");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  while (std::getline(in, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos)
      fail(ErrorCode::parse, "trailing content after " + std::to_string(m) + " edges");

  try {
    return Graph(static_cast<std::size_t>(n), edges);
  } catch (const Error& e) {
    fail(ErrorCode::parse, e.what());
  }
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::io, "cannot open " + path.string());
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_edge_list(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  require(static_cast<bool>(out), ErrorCode::io, "cannot write " + path.string());
  write_edge_list(out, g);
  require(static_cast<bool>(out), ErrorCode::io, "write failed for " + path.string());
}

}  // namespace hpl
