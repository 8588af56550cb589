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

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

#include "ecx/coloring.hpp"

namespace ecx {

namespace {

// Misra-Gries style incremental coloring on a dense color matrix. Colors
// are 1..max_degree+1, 0 means uncolored.
class FanRecoloring {
 public:
  explicit FanRecoloring(const SimpleGraph& g)
      : g_(g),
        n_(g.vertex_count()),
        limit_(g.max_degree() + 1),
        color_(static_cast<std::size_t>(n_) * n_, 0) {}

  std::vector<int> run() {
    for (auto [u, v] : g_.edges()) color_edge(u, v);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(g_.edge_count()));
    for (auto [u, v] : g_.edges()) out.push_back(at(u, v));
    return out;
  }

 private:
  int at(int u, int v) const {
    return color_[static_cast<std::size_t>(u) * n_ + v];
  }
  void set(int u, int v, int c) {
    color_[static_cast<std::size_t>(u) * n_ + v] = c;
    color_[static_cast<std::size_t>(v) * n_ + u] = c;
  }

  bool is_free(int v, int c) const {
    if (c <= 0 || c > limit_) return false;
    std::uint64_t row = g_.neighbors(v);
    while (row != 0) {
      const int w = std::countr_zero(row);
      row &= row - 1;
      if (at(v, w) == c) return false;
    }
    return true;
  }

  int least_free(int v) const {
    for (int c = 1;; ++c) {
      if (is_free(v, c)) return c;
    }
  }

  int neighbor_via(int v, int c, int skip) const {
    std::uint64_t row = g_.neighbors(v);
    while (row != 0) {
      const int w = std::countr_zero(row);
      row &= row - 1;
      if (w != skip && at(v, w) == c) return w;
    }
    return -1;
  }

  // Swaps colors c and d along the maximal alternating path leaving x on a
  // d-edge. Properness is restored once the whole path is rewritten.
  void invert_path(int x, int c, int d) {
    int prev = -1;
    int cur = x;
    int want = d;
    while (true) {
      const int nxt = neighbor_via(cur, want, prev);
      if (nxt < 0) return;
      const int other = want == d ? c : d;
      set(cur, nxt, other);
      prev = cur;
      cur = nxt;
      want = other;
    }
  }

  void color_edge(int x, int y) {
    // maximal fan of x anchored at the uncolored edge xy
    std::vector<int> fan{y};
    bool extended = true;
    while (extended) {
      extended = false;
      std::uint64_t row = g_.neighbors(x);
      while (row != 0) {
        const int v = std::countr_zero(row);
        row &= row - 1;
        const int cv = at(x, v);
        if (cv == 0) continue;
        if (std::find(fan.begin(), fan.end(), v) != fan.end()) continue;
        if (is_free(fan.back(), cv)) {
          fan.push_back(v);
          extended = true;
        }
      }
    }

    const int c = least_free(x);
    const int d = least_free(fan.back());
    invert_path(x, c, d);

    std::size_t w = 0;
    while (w < fan.size() && !is_free(fan[w], d)) ++w;
    if (w == fan.size()) {
      throw std::logic_error("fan recoloring lost the free color");
    }
    // d was freed at x by the inversion, so some fan prefix ends at a vertex
    // with d free; rotate up to it and finish with d.
    for (std::size_t i = 0; i + 1 <= w; ++i) {
      set(x, fan[i], at(x, fan[i + 1]));
    }
    set(x, fan[w], d);
  }

  const SimpleGraph& g_;
  int n_;
  int limit_;
  std::vector<int> color_;
};

}  // namespace

ProperEdgeColoring vizing_plus_one_coloring(const SimpleGraph& g) {
  if (g.edge_count() == 0) return {g, 0, {}};
  std::vector<int> colors = FanRecoloring(g).run();
  const int palette = *std::max_element(colors.begin(), colors.end());
  return {g, palette, std::move(colors)};
}

}  // namespace ecx
