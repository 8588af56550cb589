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

#ifndef ECX_ENUMERATE_HPP
#define ECX_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "ecx/graph.hpp"

namespace ecx {

/// Self-contained enumeration cap; beyond it, graph6 streams from external
/// generators feed the same consumers.
inline constexpr int kEnumerationCap = 9;

/// Streams exactly one canonically labeled representative per isomorphism
/// class on n vertices, 1 <= n <= kEnumerationCap. Generation is orderly:
/// graphs with m+1 edges are grown from graphs with m edges and kept only
/// when deleting the child's canonical last edge reproduces the parent, so
/// no class is ever emitted twice and only one edge level is held in
/// memory. Emission order is deterministic: ascending edge count, then
/// ascending canonical form.
void enumerate_graphs(int n,
                      const std::function<void(const SimpleGraph&)>& sink);

/// Convenience: materializes the whole stream.
std::vector<SimpleGraph> enumerate_graphs(int n);

/// Number of isomorphism classes on n vertices.
std::uint64_t count_graphs(int n);

}  // namespace ecx

#endif  // ECX_ENUMERATE_HPP
