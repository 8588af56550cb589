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

#include "ecx/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace ecx {

namespace {

// Depth-first minimization over degree-respecting relabelings; the degree
// partition is the only pruning beyond the prefix comparison inherent to
// taking a minimum. Position p contributes one "column" (the adjacency
// bits towards positions 0..p-1, bit (0,p) most significant), so a
// permutation's bit sequence is the concatenation of its columns and
// prefixes compare column by column against the best sequence so far.
class MinFormSearch {
 public:
  explicit MinFormSearch(const SimpleGraph& g) : n_(g.vertex_count()) {
    for (int v = 0; v < n_; ++v) {
      adj_[v] = g.neighbors(v);
      deg_[v] = std::popcount(adj_[v]);
      target_[v] = deg_[v];
    }
    std::sort(target_.begin(), target_.begin() + n_);
    best_.fill(~std::uint64_t{0});
  }

  std::uint64_t run() {
    dfs(0);
    return pack();
  }

 private:
  struct Candidate {
    std::uint64_t column;
    int v;
  };

  void dfs(int p) {
    if (p == n_) {
      if (!have_leaf_ ||
          std::lexicographical_compare(cols_.begin(), cols_.begin() + n_,
                                       best_.begin(), best_.begin() + n_)) {
        best_ = cols_;
      }
      have_leaf_ = true;
      return;
    }
    std::array<Candidate, kCanonicalCap> cand{};
    int ncand = 0;
    for (int v = 0; v < n_; ++v) {
      if ((used_ >> v) & 1u) continue;
      if (deg_[v] != target_[p]) continue;
      std::uint64_t col = 0;
      for (int i = 0; i < p; ++i) col = (col << 1) | ((adj_[v] >> perm_[i]) & 1u);
      cand[ncand++] = {col, v};
    }
    std::sort(cand.begin(), cand.begin() + ncand,
              [](const Candidate& a, const Candidate& b) {
                return a.column != b.column ? a.column < b.column : a.v < b.v;
              });
    for (int c = 0; c < ncand; ++c) {
      // compare against the current best afresh: earlier siblings may have
      // lowered it
      if (prefix_exceeds_best(p, cand[c].column)) break;
      perm_[p] = cand[c].v;
      cols_[p] = cand[c].column;
      used_ |= std::uint64_t{1} << cand[c].v;
      dfs(p + 1);
      used_ &= ~(std::uint64_t{1} << cand[c].v);
    }
  }

  // True iff (cols_[0..p-1], col) > (best_[0..p-1], best_[p]); such a branch
  // cannot contain the minimum. Candidates are sorted by column, so the
  // caller may stop at the first offender.
  bool prefix_exceeds_best(int p, std::uint64_t col) const {
    for (int i = 0; i < p; ++i) {
      if (cols_[i] != best_[i]) return cols_[i] > best_[i];
    }
    return col > best_[p];
  }

  std::uint64_t pack() const {
    const int total = n_ * (n_ - 1) / 2;
    std::uint64_t bits = 0;
    int k = 0;
    for (int j = 1; j < n_; ++j) {
      for (int i = 0; i < j; ++i, ++k) {
        const std::uint64_t b = (best_[j] >> (j - 1 - i)) & 1u;
        bits |= b << (total - 1 - k);
      }
    }
    return bits;
  }

  int n_;
  std::array<std::uint64_t, kCanonicalCap> adj_{};
  std::array<int, kCanonicalCap> deg_{};
  std::array<int, kCanonicalCap> target_{};
  std::array<int, kCanonicalCap> perm_{};
  std::array<std::uint64_t, kCanonicalCap> cols_{};
  std::array<std::uint64_t, kCanonicalCap> best_{};
  std::uint64_t used_ = 0;
  bool have_leaf_ = false;
};

}  // namespace

CanonicalForm canonical_form(const SimpleGraph& g) {
  const int n = g.vertex_count();
  if (n > kCanonicalCap) {
    throw std::invalid_argument("canonical form capped at " +
                                std::to_string(kCanonicalCap) + " vertices");
  }
  if (n <= 1) return {n, 0};
  return {n, MinFormSearch(g).run()};
}

SimpleGraph graph_of(const CanonicalForm& form) {
  SimpleGraph g(form.n);
  const int total = form.n * (form.n - 1) / 2;
  int k = 0;
  for (int j = 1; j < form.n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if ((form.bits >> (total - 1 - k)) & 1u) g.link(i, j);
    }
  }
  return g;
}

SimpleGraph canonical_graph(const SimpleGraph& g) {
  return graph_of(canonical_form(g));
}

}  // namespace ecx
