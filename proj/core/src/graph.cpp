// Copyright 2026 The ecx authors
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

#include "ecx/graph.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace ecx {

VertexPair make_pair_sorted(int u, int v) {
  return u < v ? VertexPair{u, v} : VertexPair{v, u};
}

SimpleGraph::SimpleGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("graph order must be in [0, " +
                                std::to_string(kMaxVertices) + "], got " +
                                std::to_string(n));
  }
}

void SimpleGraph::require_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range for order " +
                                std::to_string(n_));
  }
}

int SimpleGraph::edge_count() const {
  int twice = 0;
  for (std::uint64_t row : adj_) twice += std::popcount(row);
  return twice / 2;
}

bool SimpleGraph::has_edge(int u, int v) const {
  require_vertex(u);
  require_vertex(v);
  return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
}

int SimpleGraph::degree(int v) const {
  require_vertex(v);
  return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

int SimpleGraph::max_degree() const {
  int d = 0;
  for (std::uint64_t row : adj_) d = std::max(d, std::popcount(row));
  return d;
}

int SimpleGraph::min_degree() const {
  if (n_ == 0) return 0;
  int d = n_;
  for (std::uint64_t row : adj_) d = std::min(d, std::popcount(row));
  return d;
}

std::uint64_t SimpleGraph::neighbors(int v) const {
  require_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

std::vector<VertexPair> SimpleGraph::edges() const {
  std::vector<VertexPair> out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  for (int u = 0; u < n_; ++u) {
    std::uint64_t row = adj_[static_cast<std::size_t>(u)] >> (u + 1) << (u + 1);
    while (row != 0) {
      int v = std::countr_zero(row);
      row &= row - 1;
      out.emplace_back(u, v);
    }
  }
  return out;
}

bool SimpleGraph::is_complete() const {
  return edge_count() == n_ * (n_ - 1) / 2;
}

bool SimpleGraph::is_connected() const {
  if (n_ <= 1) return true;
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    while (frontier != 0) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= adj_[static_cast<std::size_t>(v)];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == n_;
}

void SimpleGraph::link(int u, int v) {
  adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

void SimpleGraph::unlink(int u, int v) {
  adj_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
  adj_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
}

SimpleGraph empty_graph(int n) { return SimpleGraph(n); }

SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.link(u, v);
  return g;
}

SimpleGraph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  SimpleGraph g(n);
  for (int v = 0; v < n; ++v) g.link(v, (v + 1) % n);
  return g;
}

SimpleGraph path_graph(int n) {
  SimpleGraph g(n);
  for (int v = 0; v + 1 < n; ++v) g.link(v, v + 1);
  return g;
}

SimpleGraph petersen_graph() {
  SimpleGraph g(10);
  for (int v = 0; v < 5; ++v) {
    g.link(v, (v + 1) % 5);          // outer cycle
    g.link(5 + v, 5 + (v + 2) % 5);  // inner pentagram
    g.link(v, 5 + v);                // spokes
  }
  return g;
}

SimpleGraph from_edge_list(int n, std::span<const VertexPair> edges) {
  SimpleGraph g(n);
  for (auto [u, v] : edges) g = add_edge(g, u, v);
  return g;
}

SimpleGraph add_edge(const SimpleGraph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (g.has_edge(u, v)) {
    throw std::invalid_argument("edge " + std::to_string(u) + "-" +
                                std::to_string(v) + " already present");
  }
  SimpleGraph out = g;
  out.link(u, v);
  return out;
}

SimpleGraph remove_edge(const SimpleGraph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (!g.has_edge(u, v)) {
    throw std::invalid_argument("edge " + std::to_string(u) + "-" +
                                std::to_string(v) + " not present");
  }
  SimpleGraph out = g;
  out.unlink(u, v);
  return out;
}

std::vector<VertexPair> complement_edges(const SimpleGraph& g) {
  std::vector<VertexPair> out;
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

SimpleGraph disjoint_union(const SimpleGraph& g1, const SimpleGraph& g2) {
  const int n1 = g1.vertex_count();
  const int n2 = g2.vertex_count();
  SimpleGraph g(n1 + n2);  // the constructor enforces the combined cap
  for (auto [u, v] : g1.edges()) g.link(u, v);
  for (auto [u, v] : g2.edges()) g.link(n1 + u, n1 + v);
  return g;
}

}  // namespace ecx
