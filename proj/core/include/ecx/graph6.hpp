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

#ifndef ECX_GRAPH6_HPP
#define ECX_GRAPH6_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include "ecx/graph.hpp"

namespace ecx {

/// Encodes a graph as a graph6 line (short-form size header, n <= 62).
/// The payload lists the upper-triangle bits columnwise -- (0,1), (0,2),
/// (1,2), (0,3), ... -- six bits per printable byte, offset by 63.
std::string encode_graph6(const SimpleGraph& g);

/// Parses one graph6 line. Rejects the long-form size header (n >= 63),
/// bytes outside 63..126, payloads of the wrong length and nonzero padding
/// bits, so parse/encode round-trips are byte-exact in both directions.
SimpleGraph parse_graph6(std::string_view line);

/// Reads graph6 lines from a stream, one graph per line. Blank lines and an
/// optional leading ">>graph6<<" header are skipped; '\r' is tolerated.
void for_each_graph6_line(std::istream& in,
                          const std::function<void(const SimpleGraph&)>& sink);

}  // namespace ecx

#endif  // ECX_GRAPH6_HPP
