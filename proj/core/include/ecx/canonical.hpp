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

#ifndef ECX_CANONICAL_HPP
#define ECX_CANONICAL_HPP

#include <compare>
#include <cstdint>

#include "ecx/graph.hpp"

namespace ecx {

/// Orders with more than 10 vertices make brute-force relabeling search
/// pointless here; larger inputs arrive pre-deduplicated via graph6 files.
inline constexpr int kCanonicalCap = 10;

/// Canonical form of an isomorphism class: the lexicographically least
/// upper-triangle bit sequence (column-major, the graph6 payload order)
/// over all relabelings that list vertices in nondecreasing degree order.
/// Equal forms identify isomorphic graphs; forms of the same order compare
/// like their bit sequences.
struct CanonicalForm {
  int n = 0;
  std::uint64_t bits = 0;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const SimpleGraph& g);

/// Rebuilds the representative graph a form encodes.
SimpleGraph graph_of(const CanonicalForm& form);

/// The canonically labeled representative of g's isomorphism class.
SimpleGraph canonical_graph(const SimpleGraph& g);

}  // namespace ecx

#endif  // ECX_CANONICAL_HPP
