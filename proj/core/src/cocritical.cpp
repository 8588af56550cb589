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

#include "ecx/cocritical.hpp"

#include <stdexcept>
#include <string>

#include "ecx/coloring.hpp"

namespace ecx {

int ramsey_p3_formula(int k) {
  if (k < 1) throw std::invalid_argument("ramsey: k must be positive");
  return 2 * ((k + 1) / 2) + 1;
}

int ramsey_p3_bruteforce(int k) {
  if (k < 1) throw std::invalid_argument("ramsey: k must be positive");
  if (k > kRamseyBruteCap) {
    throw std::invalid_argument("ramsey brute force capped at k = " +
                                std::to_string(kRamseyBruteCap));
  }
  for (int n = 1;; ++n) {
    if (chromatic_index_exact(complete_graph(n)) > k) return n;
  }
}

BoundParams bound_min_edges(int n, int d) {
  if (n < 1) throw std::invalid_argument("bound: n must be positive");
  if (d < 0) throw std::invalid_argument("bound: d must be nonnegative");
  const int half_up = (d + 1) / 2;
  const int epsilon = ((n - half_up) % 2 + 2) % 2;
  const long long clique = half_up + epsilon;
  // n - ceil(d/2) - epsilon is even by choice of epsilon, so d * (even)/2
  // stays integral for odd d.
  const long long value =
      static_cast<long long>(d) * (n - half_up - epsilon) / 2 +
      clique * (clique - 1) / 2;
  return {n, d, epsilon, value};
}

CoCriticalReport is_p3k_cocritical(const SimpleGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("co-critical: k must be positive");
  if (g.is_complete()) {
    throw std::invalid_argument(
        "co-critical: defined for non-complete graphs only");
  }
  CoCriticalReport report;
  report.k = k;
  report.max_degree = g.max_degree();
  report.chromatic_index = chromatic_index_exact(g);
  if (report.chromatic_index > k) return report;  // not even k-colorable
  for (auto [u, v] : complement_edges(g)) {
    if (chromatic_index_exact(add_edge(g, u, v)) <= k) {
      report.failing_edge = VertexPair{u, v};
      return report;
    }
  }
  report.is_cocritical = true;
  // Forced shape of accepted graphs; a failure here is a solver defect.
  if (report.chromatic_index != k || report.max_degree != k) {
    throw std::logic_error(
        "co-critical accept with chromatic index or degree != k");
  }
  return report;
}

std::vector<std::vector<VertexPair>> one_factorization(int order) {
  if (order < 2 || order % 2 != 0) {
    throw std::invalid_argument(
        "one_factorization: order must be even and at least 2");
  }
  // Circle method: vertex order-1 sits at the hub, the rest rotate.
  const int ring = order - 1;
  std::vector<std::vector<VertexPair>> rounds;
  rounds.reserve(static_cast<std::size_t>(ring));
  for (int r = 0; r < ring; ++r) {
    std::vector<VertexPair> matching;
    matching.reserve(static_cast<std::size_t>(order / 2));
    matching.push_back(make_pair_sorted(order - 1, r));
    for (int i = 1; i <= (order - 2) / 2; ++i) {
      const int a = (r + i) % ring;
      const int b = ((r - i) % ring + ring) % ring;
      matching.push_back(make_pair_sorted(a, b));
    }
    rounds.push_back(std::move(matching));
  }
  return rounds;
}

SimpleGraph construct_extremal(int n, int k) {
  if (k < 1) throw std::invalid_argument("construct: k must be positive");
  const BoundParams bound = bound_min_edges(n, k);
  const int clique = (k + 1) / 2 + bound.epsilon;
  const int regular_part = n - clique;
  if (n < (3 * k + 1) / 2 + 1 + bound.epsilon) {
    throw std::invalid_argument(
        "construct: n below the extremal construction range for this k");
  }
  // regular_part is even by the parity choice of epsilon, so the round-robin
  // factorization exists; its first k rounds give a k-regular class 1 graph.
  SimpleGraph j(regular_part);
  const auto rounds = one_factorization(regular_part);
  for (int r = 0; r < k; ++r) {
    for (auto [u, v] : rounds[static_cast<std::size_t>(r)]) j.link(u, v);
  }
  return disjoint_union(j, complete_graph(clique));
}

}  // namespace ecx
