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

#include "ecx/criticality.hpp"

#include <bit>

#include "ecx/coloring.hpp"

namespace ecx {

ClassLabel classify(const SimpleGraph& g) {
  if (g.edge_count() == 0) {
    throw std::invalid_argument("classify: edgeless graphs have no class");
  }
  const int delta = g.max_degree();
  const int chi = chromatic_index_exact(g);
  return {chi == delta ? GraphClass::Class1 : GraphClass::Class2, chi, delta};
}

bool is_critical_edge(const SimpleGraph& g, int u, int v) {
  if (!g.has_edge(u, v)) {
    throw std::invalid_argument("is_critical_edge: not an edge");
  }
  return chromatic_index_exact(remove_edge(g, u, v)) <
         chromatic_index_exact(g);
}

bool is_delta_critical(const SimpleGraph& g) {
  if (g.edge_count() == 0) return false;
  if (!g.is_connected()) return false;
  if (classify(g).cls != GraphClass::Class2) return false;
  const int chi = chromatic_index_exact(g);
  for (auto [u, v] : g.edges()) {
    if (chromatic_index_exact(remove_edge(g, u, v)) >= chi) return false;
  }
  return true;
}

namespace {

ValSide val_side(const SimpleGraph& g, int x, int y) {
  const int delta = g.max_degree();
  const SimpleGraph h = remove_edge(g, x, y);
  int found = 0;
  std::uint64_t row = h.neighbors(x);
  while (row != 0) {
    const int w = std::countr_zero(row);
    row &= row - 1;
    if (h.degree(w) == delta) ++found;
  }
  const int required = delta + 1 - g.degree(y);
  return {x, y, required, found, found >= required};
}

}  // namespace

ValCheck val_check(const SimpleGraph& g, int u, int v) {
  if (!g.has_edge(u, v)) {
    throw std::invalid_argument("val_check: not an edge");
  }
  if (classify(g).cls != GraphClass::Class2) {
    throw NotApplicableError("val_check: not applicable, graph is class 1");
  }
  if (!is_critical_edge(g, u, v)) {
    throw NotApplicableError("val_check: not applicable, edge is not critical");
  }
  ValCheck out;
  out.xy = val_side(g, u, v);
  out.yx = val_side(g, v, u);
  out.holds = out.xy.holds && out.yx.holds;
  return out;
}

bool is_saturated_class1(const SimpleGraph& g) {
  const int delta = g.max_degree();
  if (g.edge_count() > 0 && chromatic_index_exact(g) != delta) return false;
  for (auto [u, v] : complement_edges(g)) {
    if (chromatic_index_exact(add_edge(g, u, v)) != delta + 1) return false;
  }
  return true;  // complete graphs land here vacuously
}

DegreePartition degree_partition(const SimpleGraph& g) {
  const int delta = g.max_degree();
  if (delta == 0) {
    throw std::invalid_argument("degree_partition: maximum degree is 0");
  }
  DegreePartition out;
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v) {
    (g.degree(v) < delta ? out.below_max : out.at_max).push_back(v);
  }
  if (out.below_max.empty()) return out;  // regular graph: no pivot
  int pivot = out.below_max.front();
  for (int v : out.below_max) {
    if (g.degree(v) < g.degree(pivot)) pivot = v;
  }
  out.pivot = pivot;
  const std::uint64_t closed =
      g.neighbors(pivot) | (std::uint64_t{1} << pivot);
  for (int v = 0; v < n; ++v) {
    if ((closed >> v) & 1u) out.closed_neighborhood.push_back(v);
  }
  for (int v : out.below_max) {
    if (((closed >> v) & 1u) == 0) out.remote.push_back(v);
  }
  return out;
}

}  // namespace ecx
