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

#include "ecx/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "ecx/canonical.hpp"

namespace ecx {

namespace {

// Splits the column-major bit index of the least significant set bit of a
// canonical form into its vertex pair. That bit is the form's last edge in
// sequence order, the one the orderly step deletes.
VertexPair last_edge(const CanonicalForm& form) {
  const int total = form.n * (form.n - 1) / 2;
  const int k = total - 1 - std::countr_zero(form.bits);
  int j = 1;
  while ((j + 1) * j / 2 <= k) ++j;
  return {k - j * (j - 1) / 2, j};
}

}  // namespace

void enumerate_graphs(int n,
                      const std::function<void(const SimpleGraph&)>& sink) {
  if (n < 1 || n > kEnumerationCap) {
    throw std::invalid_argument("enumeration supports 1 <= n <= " +
                                std::to_string(kEnumerationCap) + ", got " +
                                std::to_string(n));
  }
  const int total = n * (n - 1) / 2;
  std::vector<std::uint64_t> level{0};  // the edgeless graph
  std::vector<std::uint64_t> next;
  std::vector<std::uint64_t> seen;
  for (int m = 0;; ++m) {
    for (std::uint64_t bits : level) sink(graph_of({n, bits}));
    if (m == total) break;
    next.clear();
    for (std::uint64_t bits : level) {
      const SimpleGraph parent = graph_of({n, bits});
      seen.clear();
      for (auto [u, v] : complement_edges(parent)) {
        SimpleGraph child = parent;
        child.link(u, v);
        const CanonicalForm cf = canonical_form(child);
        if (std::find(seen.begin(), seen.end(), cf.bits) != seen.end()) {
          continue;
        }
        seen.push_back(cf.bits);
        SimpleGraph rep = graph_of(cf);
        const auto [i, j] = last_edge(cf);
        rep.unlink(i, j);
        if (canonical_form(rep).bits == bits) next.push_back(cf.bits);
      }
    }
    std::sort(next.begin(), next.end());
    level.swap(next);
  }
}

std::vector<SimpleGraph> enumerate_graphs(int n) {
  std::vector<SimpleGraph> out;
  enumerate_graphs(n, [&](const SimpleGraph& g) { out.push_back(g); });
  return out;
}

std::uint64_t count_graphs(int n) {
  std::uint64_t count = 0;
  enumerate_graphs(n, [&](const SimpleGraph&) { ++count; });
  return count;
}

}  // namespace ecx
