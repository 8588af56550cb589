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

#include "ecx/graph6.hpp"

#include <istream>
#include <stdexcept>

namespace ecx {

namespace {
constexpr int kBias = 63;       // printable offset
constexpr int kLongForm = 126;  // '~' introduces the unsupported long header
}  // namespace

std::string encode_graph6(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::string out;
  out.push_back(static_cast<char>(kBias + n));
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(kBias + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(kBias + (acc << (6 - nbits))));
  return out;
}

SimpleGraph parse_graph6(std::string_view line) {
  if (line.empty()) throw std::invalid_argument("graph6: empty line");
  const unsigned char head = static_cast<unsigned char>(line[0]);
  if (head == kLongForm) {
    throw std::invalid_argument("graph6: long-form size header unsupported");
  }
  if (head < kBias || head > kBias + SimpleGraph::kMaxVertices) {
    throw std::invalid_argument("graph6: malformed size header");
  }
  const int n = head - kBias;
  const int nbits = n * (n - 1) / 2;
  const std::size_t want = static_cast<std::size_t>((nbits + 5) / 6);
  if (line.size() - 1 != want) {
    throw std::invalid_argument("graph6: payload has wrong length");
  }
  SimpleGraph g(n);
  int bit = 0;
  for (std::size_t pos = 1; pos < line.size(); ++pos) {
    const unsigned char c = static_cast<unsigned char>(line[pos]);
    if (c < kBias || c > kLongForm) {
      throw std::invalid_argument("graph6: byte outside printable range");
    }
    const int group = c - kBias;
    for (int s = 5; s >= 0; --s, ++bit) {
      const int b = (group >> s) & 1;
      if (bit >= nbits) {
        if (b != 0) throw std::invalid_argument("graph6: nonzero padding");
        continue;
      }
      if (b != 0) {
        // bit index -> column-major pair (i, j)
        int j = 1;
        while ((j + 1) * j / 2 <= bit) ++j;
        const int i = bit - j * (j - 1) / 2;
        g.link(i, j);
      }
    }
  }
  return g;
}

void for_each_graph6_line(std::istream& in,
                          const std::function<void(const SimpleGraph&)>& sink) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind(">>graph6<<", 0) == 0) {
      line.erase(0, 10);
      if (line.empty()) continue;
    }
    sink(parse_graph6(line));
  }
}

}  // namespace ecx
