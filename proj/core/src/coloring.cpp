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

#include "ecx/coloring.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace ecx {

namespace {

std::uint64_t palette_mask(int t) {
  return t >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << t) - 1;
}

}  // namespace

ProperEdgeColoring::ProperEdgeColoring(SimpleGraph host, int palette,
                                       std::vector<int> colors)
    : host_(std::move(host)), palette_(palette), colors_(std::move(colors)) {
  const int n = host_.vertex_count();
  const auto edge_list = host_.edges();
  if (palette_ < 0) throw std::invalid_argument("negative palette");
  if (colors_.size() != edge_list.size()) {
    throw std::invalid_argument("color vector does not match edge count");
  }
  edge_index_.assign(static_cast<std::size_t>(n) * n, -1);
  std::vector<std::uint64_t> used(static_cast<std::size_t>(n), 0);
  for (std::size_t idx = 0; idx < edge_list.size(); ++idx) {
    const auto [u, v] = edge_list[idx];
    const int c = colors_[idx];
    if (c < 1 || c > palette_) {
      throw std::invalid_argument("edge color " + std::to_string(c) +
                                  " outside palette [1, " +
                                  std::to_string(palette_) + "]");
    }
    const std::uint64_t bit = std::uint64_t{1} << (c - 1);
    if ((used[u] & bit) != 0 || (used[v] & bit) != 0) {
      throw std::invalid_argument("adjacent edges share color " +
                                  std::to_string(c));
    }
    used[u] |= bit;
    used[v] |= bit;
    edge_index_[static_cast<std::size_t>(u) * n + v] = static_cast<int>(idx);
    edge_index_[static_cast<std::size_t>(v) * n + u] = static_cast<int>(idx);
  }
}

int ProperEdgeColoring::color_of(int u, int v) const {
  const int n = host_.vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n || u == v ||
      edge_index_[static_cast<std::size_t>(u) * n + v] < 0) {
    throw std::invalid_argument("color_of: not an edge");
  }
  return colors_[static_cast<std::size_t>(
      edge_index_[static_cast<std::size_t>(u) * n + v])];
}

std::uint64_t ProperEdgeColoring::present_mask(int v) const {
  std::uint64_t mask = 0;
  std::uint64_t row = host_.neighbors(v);
  while (row != 0) {
    const int w = std::countr_zero(row);
    row &= row - 1;
    mask |= std::uint64_t{1} << (color_of(v, w) - 1);
  }
  return mask;
}

std::string ProperEdgeColoring::serialize() const {
  std::string out;
  const auto edge_list = host_.edges();
  for (std::size_t idx = 0; idx < edge_list.size(); ++idx) {
    out += std::to_string(edge_list[idx].first);
    out += ' ';
    out += std::to_string(edge_list[idx].second);
    out += ' ';
    out += std::to_string(colors_[idx]);
    out += '\n';
  }
  return out;
}

std::vector<int> missing_colors(const ProperEdgeColoring& c, int u) {
  std::uint64_t absent = ~c.present_mask(u) & palette_mask(c.palette_size());
  std::vector<int> out;
  while (absent != 0) {
    out.push_back(std::countr_zero(absent) + 1);
    absent &= absent - 1;
  }
  return out;
}

KempeChain kempe_chain(const ProperEdgeColoring& c, int u, int alpha,
                       int beta) {
  const int t = c.palette_size();
  if (alpha == beta || alpha < 1 || beta < 1 || alpha > t || beta > t) {
    throw std::invalid_argument("kempe_chain: need two distinct palette colors");
  }
  const SimpleGraph& g = c.graph();

  // In the two-color subgraph every vertex has degree <= 2, so the walk from
  // u along alternating colors either closes into an even cycle or stops at
  // a vertex missing one of the colors.
  auto neighbor_via = [&](int v, int color) -> int {
    std::uint64_t row = g.neighbors(v);
    while (row != 0) {
      const int w = std::countr_zero(row);
      row &= row - 1;
      if (c.color_of(v, w) == color) return w;
    }
    return -1;
  };

  KempeChain chain;
  chain.alpha = alpha;
  chain.beta = beta;

  const bool has_alpha = neighbor_via(u, alpha) >= 0;
  const bool has_beta = neighbor_via(u, beta) >= 0;
  if (!has_alpha && !has_beta) {
    chain.vertices = {u};
    chain.shape = KempeChain::Shape::Path;
    return chain;
  }

  // Walk one direction; on a path that ran from an interior start, prepend
  // the other direction afterwards.
  auto walk = [&](int first_color) {
    std::vector<int> verts{u};
    int color = first_color;
    int cur = u;
    while (true) {
      const int nxt = neighbor_via(cur, color);
      if (nxt < 0) return std::pair{verts, false};
      if (nxt == u) return std::pair{verts, true};  // closed an even cycle
      verts.push_back(nxt);
      cur = nxt;
      color = color == alpha ? beta : alpha;
    }
  };

  const int forward_color = has_alpha ? alpha : beta;
  auto [forward, closed] = walk(forward_color);
  std::vector<int> order;
  if (closed) {
    chain.shape = KempeChain::Shape::EvenCycle;
    order = std::move(forward);
  } else {
    chain.shape = KempeChain::Shape::Path;
    if (has_alpha && has_beta) {
      auto [backward, closed2] = walk(beta);
      (void)closed2;  // a cycle would have closed on the first walk
      order.assign(backward.rbegin(), backward.rend());
      order.insert(order.end(), forward.begin() + 1, forward.end());
    } else {
      order = std::move(forward);
    }
  }
  chain.vertices = order;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    chain.edges.push_back(make_pair_sorted(order[i], order[i + 1]));
  }
  if (chain.shape == KempeChain::Shape::EvenCycle) {
    chain.edges.push_back(make_pair_sorted(order.back(), order.front()));
  }
  return chain;
}

ProperEdgeColoring kempe_swap(const ProperEdgeColoring& c,
                              const KempeChain& chain) {
  const auto edge_list = c.graph().edges();
  std::vector<int> colors = c.colors();
  for (const auto& e : chain.edges) {
    const auto it = std::find(edge_list.begin(), edge_list.end(), e);
    if (it == edge_list.end()) {
      throw std::invalid_argument("kempe_swap: chain edge not in host graph");
    }
    int& col = colors[static_cast<std::size_t>(it - edge_list.begin())];
    if (col == chain.alpha) {
      col = chain.beta;
    } else if (col == chain.beta) {
      col = chain.alpha;
    } else {
      throw std::invalid_argument("kempe_swap: chain does not match coloring");
    }
  }
  return {c.graph(), c.palette_size(), std::move(colors)};
}

namespace {

// Shared backtracking core. With break_symmetry, edges at the first
// maximum-degree vertex are pre-colored 1..d (any solution can be permuted
// into that shape), the rest follow in decreasing endpoint-degree-sum
// order, lowest feasible color first. The search is deterministic, so
// witnesses are reproducible run to run.
class EdgeColorSearch {
 public:
  EdgeColorSearch(const SimpleGraph& g, int t, bool break_symmetry = true)
      : g_(g), t_(t), break_symmetry_(break_symmetry) {
    edges_ = g.edges();
    n_ = g.vertex_count();
  }

  // visit: called with a complete assignment (colors aligned with order_);
  // return false to stop. Returns true if the search was exhausted.
  bool run(const std::function<bool()>& leaf) {
    const int m = static_cast<int>(edges_.size());
    used_.assign(static_cast<std::size_t>(n_), 0);
    order_.clear();
    assigned_.assign(static_cast<std::size_t>(m), 0);

    if (t_ < g_.max_degree()) return true;  // no coloring can exist

    int anchor = 0;
    for (int v = 0; v < n_; ++v) {
      if (g_.degree(v) == g_.max_degree()) {
        anchor = v;
        break;
      }
    }

    std::vector<char> fixed(static_cast<std::size_t>(m), 0);
    prefix_ = 0;
    if (break_symmetry_ && g_.max_degree() > 0) {
      int next_color = 1;
      for (std::size_t idx = 0; idx < edges_.size(); ++idx) {
        const auto [u, v] = edges_[idx];
        if (u == anchor || v == anchor) {
          order_.push_back(static_cast<int>(idx));
          assigned_[order_.size() - 1] = next_color++;
          fixed[idx] = 1;
          ++prefix_;
        }
      }
      for (int i = 0; i < prefix_; ++i) {
        const auto [u, v] = edges_[static_cast<std::size_t>(order_[i])];
        const std::uint64_t bit = std::uint64_t{1} << (assigned_[i] - 1);
        used_[u] |= bit;
        used_[v] |= bit;
      }
    }

    std::vector<int> rest;
    for (int idx = 0; idx < m; ++idx) {
      if (!fixed[idx]) rest.push_back(idx);
    }
    std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) {
      const int da = g_.degree(edges_[a].first) + g_.degree(edges_[a].second);
      const int db = g_.degree(edges_[b].first) + g_.degree(edges_[b].second);
      return da != db ? da > db : edges_[a] < edges_[b];
    });
    order_.insert(order_.end(), rest.begin(), rest.end());

    return descend(prefix_, leaf);
  }

  // Colors in edges_ (host) order, valid after a leaf fired.
  std::vector<int> snapshot() const {
    std::vector<int> out(edges_.size(), 0);
    for (std::size_t i = 0; i < order_.size(); ++i) {
      out[static_cast<std::size_t>(order_[i])] = assigned_[i];
    }
    return out;
  }

 private:
  bool descend(int depth, const std::function<bool()>& leaf) {
    if (depth == static_cast<int>(order_.size())) return leaf();
    const auto [u, v] = edges_[static_cast<std::size_t>(order_[depth])];
    std::uint64_t avail = ~(used_[u] | used_[v]) & palette_mask(t_);
    while (avail != 0) {
      const int c = std::countr_zero(avail) + 1;
      avail &= avail - 1;
      const std::uint64_t bit = std::uint64_t{1} << (c - 1);
      used_[u] |= bit;
      used_[v] |= bit;
      assigned_[depth] = c;
      const bool keep_going = descend(depth + 1, leaf);
      used_[u] &= ~bit;
      used_[v] &= ~bit;
      if (!keep_going) return false;
    }
    return true;
  }

  const SimpleGraph& g_;
  int t_;
  bool break_symmetry_;
  int n_ = 0;
  int prefix_ = 0;
  std::vector<VertexPair> edges_;
  std::vector<int> order_;       // edge indices in assignment order
  std::vector<int> assigned_;    // color per assignment slot
  std::vector<std::uint64_t> used_;
};

}  // namespace

std::optional<ProperEdgeColoring> find_proper_coloring(const SimpleGraph& g,
                                                       int t) {
  if (t < 0) throw std::invalid_argument("palette size must be nonnegative");
  if (g.edge_count() == 0) {
    return ProperEdgeColoring(g, t, {});
  }
  EdgeColorSearch search(g, t);
  bool found = false;
  std::vector<int> witness;
  search.run([&]() {
    found = true;
    witness = search.snapshot();
    return false;  // first solution suffices
  });
  if (!found) return std::nullopt;
  return ProperEdgeColoring(g, t, std::move(witness));
}

int chromatic_index_exact(const SimpleGraph& g) {
  if (g.edge_count() == 0) return 0;
  const int delta = g.max_degree();
  return find_proper_coloring(g, delta).has_value() ? delta : delta + 1;
}

void enumerate_proper_colorings(
    const SimpleGraph& g, int t, bool reduce_palette_symmetry,
    const std::function<bool(const ProperEdgeColoring&)>& visit) {
  if (t < 0) throw std::invalid_argument("palette size must be nonnegative");
  if (g.edge_count() == 0) {
    visit(ProperEdgeColoring(g, t, {}));
    return;
  }
  EdgeColorSearch search(g, t, reduce_palette_symmetry);
  search.run(
      [&]() { return visit(ProperEdgeColoring(g, t, search.snapshot())); });
}

}  // namespace ecx
