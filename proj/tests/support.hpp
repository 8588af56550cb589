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
//
// Test-only oracles, deliberately written from first principles and kept
// independent of the implementation paths they check.

#ifndef ECX_TESTS_SUPPORT_HPP
#define ECX_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "ecx/coloring.hpp"
#include "ecx/graph.hpp"

namespace ecx::testing {

/// Plain permutation search: true iff some bijection maps edges onto edges.
inline bool isomorphic_bruteforce(const SimpleGraph& a, const SimpleGraph& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (int u = 0; u < n && match; ++u) {
      for (int v = u + 1; v < n && match; ++v) {
        if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) match = false;
      }
    }
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Applies a relabeling (vertex v of g becomes perm[v]).
inline SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& perm) {
  SimpleGraph out(g.vertex_count());
  for (auto [u, v] : g.edges()) out.link(perm[u], perm[v]);
  return out;
}

/// Unpacks a labeled graph from a bitmask over the n*(n-1)/2 vertex pairs
/// in lexicographic (row-major) order.
inline SimpleGraph labeled_graph_from_mask(int n, std::uint64_t mask) {
  SimpleGraph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1u) g.link(u, v);
    }
  }
  return g;
}

/// Counts isomorphism classes on n vertices by canonicalizing every one of
/// the 2^C(n,2) labeled graphs; the generation route never enters.
std::uint64_t count_classes_via_labeled_scan(int n);

/// Properness check by scanning every pair of edges sharing an endpoint.
inline bool proper_by_pair_scan(const SimpleGraph& g,
                                const std::vector<int>& colors) {
  const auto edge_list = g.edges();
  if (colors.size() != edge_list.size()) return false;
  for (std::size_t i = 0; i < edge_list.size(); ++i) {
    for (std::size_t j = i + 1; j < edge_list.size(); ++j) {
      const auto [a, b] = edge_list[i];
      const auto [c, d] = edge_list[j];
      const bool adjacent = a == c || a == d || b == c || b == d;
      if (adjacent && colors[i] == colors[j]) return false;
    }
  }
  return true;
}

inline bool proper_by_pair_scan(const ProperEdgeColoring& c) {
  return proper_by_pair_scan(c.graph(), c.colors());
}

}  // namespace ecx::testing

#endif  // ECX_TESTS_SUPPORT_HPP
