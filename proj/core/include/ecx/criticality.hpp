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

#ifndef ECX_CRITICALITY_HPP
#define ECX_CRITICALITY_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "ecx/graph.hpp"

namespace ecx {

/// Raised when a query's hypotheses do not apply to the input (for example
/// an adjacency-lemma check on a class 1 graph).
class NotApplicableError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class GraphClass { Class1, Class2 };

/// Class 1 means the chromatic index equals the maximum degree, class 2
/// means it exceeds it by one; no other case exists.
struct ClassLabel {
  GraphClass cls;
  int chromatic_index;
  int max_degree;
};

/// Classifies a graph with at least one edge; edgeless inputs are rejected
/// (a zero maximum degree fits neither class).
ClassLabel classify(const SimpleGraph& g);

/// True iff removing uv lowers the chromatic index.
bool is_critical_edge(const SimpleGraph& g, int u, int v);

/// Connected, class 2, and every edge critical.
bool is_delta_critical(const SimpleGraph& g);

/// Vizing adjacency check at a critical edge xy of a class 2 graph: x must
/// have at least max_degree + 1 - degree(y) neighbors of maximum degree in
/// g - xy. Both orientations are evaluated.
struct ValSide {
  int x = 0;
  int y = 0;
  int required = 0;
  int found = 0;
  bool holds = false;
};
struct ValCheck {
  ValSide xy;
  ValSide yx;
  bool holds = false;
};

/// Throws NotApplicableError unless g is class 2 and uv is critical.
ValCheck val_check(const SimpleGraph& g, int u, int v);

/// True iff g is class 1 (edgeless counts, with chromatic index 0) and
/// adding any non-edge pushes the chromatic index to max_degree(g) + 1.
/// Complete graphs satisfy the condition vacuously.
bool is_saturated_class1(const SimpleGraph& g);

/// Vertices split by degree: below_max holds those of degree < max degree,
/// at_max the rest. The pivot is the lowest-index minimum-degree vertex
/// when the graph is not regular (unset otherwise); remote lists the
/// below_max vertices outside the pivot's closed neighborhood.
struct DegreePartition {
  std::vector<int> below_max;
  std::vector<int> at_max;
  std::optional<int> pivot;
  std::vector<int> closed_neighborhood;
  std::vector<int> remote;
};

/// Rejects graphs with maximum degree 0.
DegreePartition degree_partition(const SimpleGraph& g);

}  // namespace ecx

#endif  // ECX_CRITICALITY_HPP
