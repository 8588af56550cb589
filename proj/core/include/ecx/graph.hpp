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

#ifndef ECX_GRAPH_HPP
#define ECX_GRAPH_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace ecx {

/// An unordered vertex pair, normalized so that first < second.
using VertexPair = std::pair<int, int>;

VertexPair make_pair_sorted(int u, int v);

/// Labeled simple graph on vertices 0..n-1. Adjacency is kept as one 64-bit
/// row per vertex, which caps the order at 62 (also the graph6 short-form
/// limit). Values are cheap to copy and safe to share across threads; the
/// mutating calls exist for builders and decoders, all user-facing
/// operations are value-to-value.
class SimpleGraph {
 public:
  static constexpr int kMaxVertices = 62;

  SimpleGraph() = default;
  explicit SimpleGraph(int n);

  int vertex_count() const { return n_; }
  int edge_count() const;

  bool has_edge(int u, int v) const;
  int degree(int v) const;
  int max_degree() const;
  int min_degree() const;

  /// Adjacency row of v as a bitmask (bit u set iff uv is an edge).
  std::uint64_t neighbors(int v) const;

  /// All edges as (u, v) pairs with u < v, in lexicographic order.
  std::vector<VertexPair> edges() const;

  bool is_complete() const;
  bool is_connected() const;

  bool operator==(const SimpleGraph&) const = default;

  // Unchecked edge insertion/removal; callers guarantee 0 <= u,v < n, u != v.
  void link(int u, int v);
  void unlink(int u, int v);

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;

  void require_vertex(int v) const;
};

// Standard families.
SimpleGraph empty_graph(int n);
SimpleGraph complete_graph(int n);
SimpleGraph cycle_graph(int n);  // n >= 3
SimpleGraph path_graph(int n);
SimpleGraph petersen_graph();

/// Builds a graph from an explicit edge list; rejects loops and duplicates.
SimpleGraph from_edge_list(int n, std::span<const VertexPair> edges);

/// Returns g plus the edge uv. Rejects loops and existing edges.
SimpleGraph add_edge(const SimpleGraph& g, int u, int v);

/// Returns g minus the edge uv. Rejects absent edges.
SimpleGraph remove_edge(const SimpleGraph& g, int u, int v);

/// The non-edges of g as sorted pairs; empty iff g is complete.
std::vector<VertexPair> complement_edges(const SimpleGraph& g);

/// Disjoint union; the second operand's labels are shifted by g1's order.
SimpleGraph disjoint_union(const SimpleGraph& g1, const SimpleGraph& g2);

}  // namespace ecx

#endif  // ECX_GRAPH_HPP
