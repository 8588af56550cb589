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

#ifndef ECX_COCRITICAL_HPP
#define ECX_COCRITICAL_HPP

#include <optional>
#include <vector>

#include "ecx/graph.hpp"

namespace ecx {

/// Smallest n such that every k-edge-coloring of K_n has two adjacent edges
/// of equal color: 2*ceil(k/2) + 1.
int ramsey_p3_formula(int k);

inline constexpr int kRamseyBruteCap = 8;

/// Same value found from first principles: the least n whose complete graph
/// has chromatic index above k, by the exact solver. 1 <= k <= 8.
int ramsey_p3_bruteforce(int k);

/// The minimum-edge bound, parametrized by the vertex count n and by d
/// (the color count k for co-critical graphs, the maximum degree for
/// saturated class 1 graphs):
///
///   value = (d/2) * (n - ceil(d/2) - epsilon) + C(ceil(d/2) + epsilon, 2)
///
/// with epsilon the remainder of n - ceil(d/2) modulo 2. The equivalent
/// expanded form 2*value = d*n - (ceil(d/2)+eps)*(floor(d/2)-eps+1) is used
/// as a cross-check. The value is meaningful (and nonnegative) on the
/// theorems' ranges; tiny n relative to d can push the raw expression
/// negative, which is preserved rather than clamped.
struct BoundParams {
  int n = 0;
  int d = 0;
  int epsilon = 0;
  long long value = 0;
};

BoundParams bound_min_edges(int n, int d);

/// Outcome of the co-criticality decision for (g, k): g must admit a proper
/// k-edge-coloring while every single-edge extension must not. On success
/// the chromatic index and the maximum degree both equal k (asserted; this
/// is forced, not assumed). On failure, failing_edge carries the
/// lexicographically least non-edge whose addition stays k-colorable, when
/// that is the reason.
struct CoCriticalReport {
  int k = 0;
  bool is_cocritical = false;
  int chromatic_index = 0;
  int max_degree = 0;
  std::optional<VertexPair> failing_edge;
};

/// Rejects complete graphs (the notion is defined for non-complete g) and
/// k < 1.
CoCriticalReport is_p3k_cocritical(const SimpleGraph& g, int k);

/// Circle-method one-factorization of the complete graph on an even number
/// of vertices: order-1 pairwise edge-disjoint perfect matchings that cover
/// every edge.
std::vector<std::vector<VertexPair>> one_factorization(int order);

/// Extremal witness: the disjoint union of a k-regular class 1 graph J (the
/// first k rounds of a one-factorization) and a clique of order
/// ceil(k/2) + epsilon. Meets bound_min_edges(n, k) exactly and is
/// (P3; k)-co-critical. Requires k >= 1 and n >= ceil(3k/2) + 1 + epsilon.
SimpleGraph construct_extremal(int n, int k);

}  // namespace ecx

#endif  // ECX_COCRITICAL_HPP
