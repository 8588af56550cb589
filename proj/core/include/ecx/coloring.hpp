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

#ifndef ECX_COLORING_HPP
#define ECX_COLORING_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ecx/graph.hpp"

namespace ecx {

/// A proper edge coloring of a host graph: every edge carries a color from
/// the palette 1..t and adjacent edges never share one. The invariant is
/// checked at construction, so instances are valid by type.
class ProperEdgeColoring {
 public:
  /// `colors` runs parallel to host.edges(); throws if any value falls
  /// outside [1, palette] or two adjacent edges collide.
  ProperEdgeColoring(SimpleGraph host, int palette, std::vector<int> colors);

  const SimpleGraph& graph() const { return host_; }
  int palette_size() const { return palette_; }
  const std::vector<int>& colors() const { return colors_; }

  int color_of(int u, int v) const;  // throws on non-edges

  /// Colors present at v (the edge colors seen from v), as a bitmask with
  /// bit c set for color c.
  std::uint64_t present_mask(int v) const;

  /// Text form: one "u v color" line per edge, sorted by (u, v).
  std::string serialize() const;

 private:
  SimpleGraph host_;
  int palette_ = 0;
  std::vector<int> colors_;
  std::vector<int> edge_index_;  // n*n lookup, -1 for non-edges
};

/// Palette colors absent at u, ascending. Size is palette - degree(u).
std::vector<int> missing_colors(const ProperEdgeColoring& c, int u);

/// One component of the two-color subgraph spanned by colors alpha/beta.
/// Components are paths or even cycles; a vertex missing both colors forms
/// a degenerate one-vertex path.
struct KempeChain {
  int alpha = 0;
  int beta = 0;
  std::vector<int> vertices;       // walk order; cycles omit the repeat
  std::vector<VertexPair> edges;   // consecutive along the walk
  enum class Shape { Path, EvenCycle } shape = Shape::Path;

  bool is_path() const { return shape == Shape::Path; }
  int start() const { return vertices.front(); }
  int end() const { return vertices.back(); }
};

/// The maximal alpha/beta component through u. When exactly one of the two
/// colors is present at u the chain is a path starting at u.
KempeChain kempe_chain(const ProperEdgeColoring& c, int u, int alpha, int beta);

/// Exchanges alpha and beta on the chain's edges; the result is proper on
/// the same palette.
ProperEdgeColoring kempe_swap(const ProperEdgeColoring& c,
                              const KempeChain& chain);

/// Complete backtracking decision procedure: returns a witness iff the
/// chromatic index of g is at most t, never a false "none". Edges are
/// assigned in decreasing endpoint-degree-sum order and color-permutation
/// symmetry is broken by pre-fixing colors 1..d on the edges at the first
/// maximum-degree vertex. Witnesses are deterministic (lowest feasible
/// color first).
std::optional<ProperEdgeColoring> find_proper_coloring(const SimpleGraph& g,
                                                       int t);

/// Least t admitting a proper t-edge-coloring: 0 for edgeless graphs, else
/// the maximum degree or one more. Only the t = max degree decision is
/// searched; failure settles the +1 case.
int chromatic_index_exact(const SimpleGraph& g);

/// Constructive coloring with at most max_degree + 1 colors via fan
/// rotations and two-color path inversions. Polynomial, no backtracking.
/// The palette of the result is the largest color actually used.
ProperEdgeColoring vizing_plus_one_coloring(const SimpleGraph& g);

/// Visits every proper t-edge-coloring of g. With reduce_palette_symmetry,
/// the edges at the first maximum-degree vertex keep fixed colors 1..d;
/// when t equals the maximum degree that yields exactly one member of each
/// color-permutation orbit. Return false from the callback to stop early.
void enumerate_proper_colorings(
    const SimpleGraph& g, int t, bool reduce_palette_symmetry,
    const std::function<bool(const ProperEdgeColoring&)>& visit);

}  // namespace ecx

#endif  // ECX_COLORING_HPP
