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
#include <random>
#include <set>

#include "doctest.h"
#include "ecx/cocritical.hpp"
#include "ecx/coloring.hpp"
#include "ecx/enumerate.hpp"
#include "ecx/graph.hpp"
#include "support.hpp"

using namespace ecx;

TEST_SUITE_BEGIN("edge-coloring");

TEST_CASE("coloring type enforces properness and palette range") {
  const SimpleGraph p3 = path_graph(3);
  CHECK_THROWS_AS(ProperEdgeColoring(p3, 2, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(ProperEdgeColoring(p3, 2, {1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(ProperEdgeColoring(p3, 2, {1}), std::invalid_argument);
  const ProperEdgeColoring ok(p3, 2, {1, 2});
  CHECK(ok.color_of(0, 1) == 1);
  CHECK(ok.color_of(2, 1) == 2);
  CHECK_THROWS_AS(ok.color_of(0, 2), std::invalid_argument);
  CHECK(ok.serialize() == "0 1 1\n1 2 2\n");
}

TEST_CASE("decision procedure on known instances") {
  CHECK(find_proper_coloring(cycle_graph(4), 2).has_value());
  CHECK_FALSE(find_proper_coloring(complete_graph(3), 2).has_value());
  CHECK_FALSE(find_proper_coloring(petersen_graph(), 3).has_value());
  CHECK(find_proper_coloring(petersen_graph(), 4).has_value());
  CHECK(find_proper_coloring(empty_graph(4), 0).has_value());
  CHECK_FALSE(find_proper_coloring(path_graph(3), 0).has_value());
  CHECK_THROWS_AS(find_proper_coloring(path_graph(3), -1),
                  std::invalid_argument);
}

TEST_CASE("witnesses are proper and deterministic") {
  const auto w1 = find_proper_coloring(petersen_graph(), 4);
  const auto w2 = find_proper_coloring(petersen_graph(), 4);
  REQUIRE(w1.has_value());
  REQUIRE(w2.has_value());
  CHECK(w1->colors() == w2->colors());
  CHECK(testing::proper_by_pair_scan(*w1));
}

TEST_CASE("chromatic index on known graphs") {
  CHECK(chromatic_index_exact(complete_graph(3)) == 3);
  CHECK(chromatic_index_exact(complete_graph(4)) == 3);
  CHECK(chromatic_index_exact(petersen_graph()) == 4);
  CHECK(chromatic_index_exact(empty_graph(5)) == 0);
  CHECK(chromatic_index_exact(cycle_graph(6)) == 2);
  CHECK(chromatic_index_exact(cycle_graph(5)) == 3);
  CHECK(chromatic_index_exact(path_graph(2)) == 1);
}

TEST_CASE("a one-factorization certifies the complete-graph index") {
  // independent witness: three disjoint perfect matchings cover K4
  const auto rounds = one_factorization(4);
  SimpleGraph k4(4);
  std::vector<int> colors_by_pair(16, 0);
  for (std::size_t r = 0; r < rounds.size(); ++r) {
    for (auto [u, v] : rounds[r]) {
      k4.link(u, v);
      colors_by_pair[static_cast<std::size_t>(u) * 4 + v] =
          static_cast<int>(r) + 1;
    }
  }
  REQUIRE(k4 == complete_graph(4));
  std::vector<int> colors;
  for (auto [u, v] : k4.edges()) {
    colors.push_back(colors_by_pair[static_cast<std::size_t>(u) * 4 + v]);
  }
  CHECK(testing::proper_by_pair_scan(k4, colors));  // chi'(K4) <= 3 = Delta
  CHECK(chromatic_index_exact(complete_graph(4)) == 3);
}

TEST_CASE("vizing construction stays within one extra color") {
  const auto c = vizing_plus_one_coloring(path_graph(3));
  CHECK(c.palette_size() <= 3);
  CHECK(testing::proper_by_pair_scan(c));
  const auto k4 = vizing_plus_one_coloring(complete_graph(4));
  CHECK(k4.palette_size() <= 4);
  CHECK(testing::proper_by_pair_scan(k4));
  const auto none = vizing_plus_one_coloring(empty_graph(5));
  CHECK(none.palette_size() == 0);
  const auto pet = vizing_plus_one_coloring(petersen_graph());
  CHECK(pet.palette_size() == 4);
  CHECK(testing::proper_by_pair_scan(pet));
}

TEST_CASE("vizing sandwich and solver agreement over all graphs, n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    for (const SimpleGraph& g : enumerate_graphs(n)) {
      if (g.edge_count() == 0) continue;
      const int delta = g.max_degree();
      const int chi = chromatic_index_exact(g);
      CHECK(delta <= chi);
      CHECK(chi <= delta + 1);
      const auto built = vizing_plus_one_coloring(g);
      CHECK(testing::proper_by_pair_scan(built));
      CHECK(chi <= built.palette_size());
      CHECK(built.palette_size() <= delta + 1);
    }
  }
}

TEST_CASE("decision procedure matches the index in both directions, n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    for (const SimpleGraph& g : enumerate_graphs(n)) {
      if (g.edge_count() == 0) continue;
      const int delta = g.max_degree();
      const int chi = chromatic_index_exact(g);
      for (int t = delta - 1; t <= delta + 1; ++t) {
        if (t < 0) continue;
        const auto witness = find_proper_coloring(g, t);
        CHECK(witness.has_value() == (chi <= t));
        if (witness) CHECK(testing::proper_by_pair_scan(*witness));
      }
    }
  }
}

TEST_CASE("missing colors") {
  const auto c4 = find_proper_coloring(cycle_graph(4), 2);
  REQUIRE(c4.has_value());
  for (int v = 0; v < 4; ++v) CHECK(missing_colors(*c4, v).empty());

  const auto k3 = find_proper_coloring(complete_graph(3), 3);
  REQUIRE(k3.has_value());
  for (int v = 0; v < 3; ++v) {
    const auto missing = missing_colors(*k3, v);
    REQUIRE(missing.size() == 1);
    // the missing color at v is the color of the opposite edge
    const int a = (v + 1) % 3;
    const int b = (v + 2) % 3;
    CHECK(missing[0] == k3->color_of(a, b));
  }

  const ProperEdgeColoring lonely(empty_graph(1), 3, {});
  CHECK(missing_colors(lonely, 0) == std::vector<int>{1, 2, 3});

  // size identity: palette - degree
  for (const SimpleGraph& g : enumerate_graphs(5)) {
    if (g.edge_count() == 0) continue;
    const auto c = find_proper_coloring(g, chromatic_index_exact(g));
    REQUIRE(c.has_value());
    for (int v = 0; v < 5; ++v) {
      CHECK(static_cast<int>(missing_colors(*c, v).size()) ==
            c->palette_size() - g.degree(v));
    }
  }
}

TEST_CASE("kempe chains on known instances") {
  const ProperEdgeColoring c4(cycle_graph(4), 2, {1, 2, 2, 1});
  const KempeChain whole = kempe_chain(c4, 0, 1, 2);
  CHECK(whole.shape == KempeChain::Shape::EvenCycle);
  CHECK(whole.vertices.size() == 4);
  CHECK(whole.edges.size() == 4);

  const ProperEdgeColoring p4(path_graph(4), 2, {1, 2, 1});
  const KempeChain path = kempe_chain(p4, 0, 1, 2);
  CHECK(path.shape == KempeChain::Shape::Path);
  CHECK(path.vertices == std::vector<int>{0, 1, 2, 3});

  // interior start still walks the full component
  const KempeChain interior = kempe_chain(p4, 1, 1, 2);
  CHECK(interior.vertices.size() == 4);
  CHECK(interior.edges.size() == 3);

  const ProperEdgeColoring spare(path_graph(3), 4, {1, 2});
  const KempeChain lonely = kempe_chain(spare, 0, 3, 4);
  CHECK(lonely.vertices == std::vector<int>{0});
  CHECK(lonely.edges.empty());
  CHECK(lonely.is_path());

  CHECK_THROWS_AS(kempe_chain(p4, 0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(kempe_chain(p4, 0, 1, 3), std::invalid_argument);
}

TEST_CASE("kempe swap is a proper involution") {
  const ProperEdgeColoring p4(path_graph(4), 2, {1, 2, 1});
  const KempeChain chain = kempe_chain(p4, 0, 1, 2);
  const ProperEdgeColoring swapped = kempe_swap(p4, chain);
  CHECK(swapped.colors() == std::vector<int>{2, 1, 2});
  CHECK(testing::proper_by_pair_scan(swapped));
  const ProperEdgeColoring back = kempe_swap(swapped, chain);
  CHECK(back.colors() == p4.colors());

  const ProperEdgeColoring spare(path_graph(3), 4, {1, 2});
  const KempeChain lonely = kempe_chain(spare, 0, 3, 4);
  CHECK(kempe_swap(spare, lonely).colors() == spare.colors());
}

TEST_CASE("kempe chains partition every two-color subgraph, n <= 5") {
  for (const SimpleGraph& g : enumerate_graphs(5)) {
    if (g.edge_count() == 0) continue;
    const auto c = find_proper_coloring(g, chromatic_index_exact(g));
    REQUIRE(c.has_value());
    const int t = c->palette_size();
    for (int alpha = 1; alpha <= t; ++alpha) {
      for (int beta = alpha + 1; beta <= t; ++beta) {
        // chains through any two vertices are equal or vertex-disjoint, and
        // every alpha/beta edge lies in exactly one of them
        std::vector<std::set<int>> components;
        for (int v = 0; v < g.vertex_count(); ++v) {
          const KempeChain chain = kempe_chain(*c, v, alpha, beta);
          std::set<int> verts(chain.vertices.begin(), chain.vertices.end());
          bool seen = false;
          for (const auto& comp : components) {
            if (comp.count(v)) {
              CHECK(comp == verts);
              seen = true;
            }
          }
          if (!seen) components.push_back(std::move(verts));
        }
        std::size_t chain_edges = 0;
        std::size_t subgraph_edges = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
          const KempeChain chain = kempe_chain(*c, v, alpha, beta);
          if (chain.vertices.front() == v) chain_edges += chain.edges.size();
        }
        for (auto [u, v] : g.edges()) {
          const int col = c->color_of(u, v);
          if (col == alpha || col == beta) ++subgraph_edges;
        }
        // each component is collected once, keyed by its first-listed vertex
        std::size_t keyed = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
          if (kempe_chain(*c, v, alpha, beta).vertices.front() == v) ++keyed;
        }
        CHECK(keyed >= components.size());
        CHECK(chain_edges >= subgraph_edges);
      }
    }
  }
}

TEST_CASE("swapping a chain preserves properness everywhere, n <= 5") {
  for (const SimpleGraph& g : enumerate_graphs(5)) {
    if (g.edge_count() == 0) continue;
    const auto c = find_proper_coloring(g, g.max_degree() + 1);
    REQUIRE(c.has_value());
    const int t = c->palette_size();
    for (int v = 0; v < g.vertex_count(); ++v) {
      for (int alpha = 1; alpha <= t; ++alpha) {
        for (int beta = alpha + 1; beta <= t; ++beta) {
          const KempeChain chain = kempe_chain(*c, v, alpha, beta);
          const ProperEdgeColoring swapped = kempe_swap(*c, chain);
          CHECK(testing::proper_by_pair_scan(swapped));
          CHECK(kempe_swap(swapped, chain).colors() == c->colors());
        }
      }
    }
  }
}

TEST_CASE("vizing construction stress at full supported order") {
  // the coloring constructor re-validates properness, so every iteration
  // is a complete check
  std::mt19937 rng(2026);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 10 + static_cast<int>(rng() % 53);  // up to 62
    const int denominator = 2 + static_cast<int>(rng() % 6);
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() % denominator == 0) g.link(u, v);
      }
    }
    const ProperEdgeColoring c = vizing_plus_one_coloring(g);
    CHECK(c.palette_size() <= g.max_degree() + 1);
    CHECK(c.graph() == g);
  }
  // dense corner: complete graphs of both parities
  for (int n : {12, 13, 40, 41}) {
    const ProperEdgeColoring c = vizing_plus_one_coloring(complete_graph(n));
    CHECK(c.palette_size() <= n);
  }
}

TEST_CASE("coloring enumeration visits the forced colorings exactly once") {
  int k4_reduced = 0;
  enumerate_proper_colorings(complete_graph(4), 3, true,
                             [&](const ProperEdgeColoring& c) {
                               CHECK(testing::proper_by_pair_scan(c));
                               ++k4_reduced;
                               return true;
                             });
  CHECK(k4_reduced == 1);  // opposite edges must repeat the anchor colors

  int c6_reduced = 0;
  enumerate_proper_colorings(cycle_graph(6), 2, true,
                             [&](const ProperEdgeColoring&) {
                               ++c6_reduced;
                               return true;
                             });
  CHECK(c6_reduced == 1);  // alternation is forced once two colors are pinned

  int k3_all = 0;
  enumerate_proper_colorings(complete_graph(3), 3, false,
                             [&](const ProperEdgeColoring&) {
                               ++k3_all;
                               return true;
                             });
  CHECK(k3_all == 6);  // 3 colors on 3 pairwise-adjacent edges: 3! ways

  int stopped = 0;
  enumerate_proper_colorings(complete_graph(3), 3, false,
                             [&](const ProperEdgeColoring&) {
                               ++stopped;
                               return false;
                             });
  CHECK(stopped == 1);
}

TEST_SUITE_END();
