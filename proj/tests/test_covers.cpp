#include <doctest.h>

#include "hgx/constructions.hpp"
#include "hgx/covers.hpp"
#include "hgx/error.hpp"
#include "hgx/random.hpp"
#include "oracles.hpp"

using namespace hgx;

TEST_CASE("vertex cover examples") {
  auto c = min_vertex_cover(psi(8, 3, 2));
  CHECK(c.size() == 2);
  CHECK(c.witness == make_set({1, 2}));
  CHECK(min_vertex_cover(psi(5, 3, 5)).size() == 3);
  CHECK(min_vertex_cover(Hypergraph(4, 2)).size() == 0);
}

TEST_CASE("crosscut examples") {
  auto two = Hypergraph::from_lists(4, 3, {{1, 2, 3}, {1, 2, 4}});
  auto x = min_crosscut(two);
  CHECK(x.size() == 1);
  CHECK(x.witness == make_set({1}));
  auto tp = min_crosscut(tight_path(3, 3));
  CHECK(tp.size() == 1);
  CHECK(tp.witness == make_set({3}));
  auto triangle = Hypergraph::from_lists(3, 2, {{1, 2}, {1, 3}, {2, 3}});
  CHECK_FALSE(min_crosscut(triangle).exists());
  CHECK_FALSE(min_crosscut(triangle).size().has_value());
  CHECK(min_crosscut(Hypergraph(3, 2)).size() == 0);
}

TEST_CASE("covers against exhaustive search") {
  Rng rng(5);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 4 + static_cast<int>(rng.below(4));
    const int r = 2 + static_cast<int>(rng.below(2));
    std::vector<VertexSet> e;
    for (VertexSet s : all_subsets(n, r))
      if (rng.coin(0.25)) e.push_back(s);
    Hypergraph h(n, r, e);
    auto fam = oracle::lists(h);
    auto tau = min_vertex_cover(h);
    CHECK(tau.size() == oracle::tau(fam, n));
    CHECK(is_vertex_cover(h, *tau.witness));
    CHECK(oracle::is_cover(fam, to_vertices(*tau.witness)));
    auto sig = min_crosscut(h);
    auto want = oracle::sigma(fam, n);
    CHECK(sig.size() == want);
    if (sig.exists()) {
      CHECK(oracle::is_crosscut(fam, to_vertices(*sig.witness)));
      CHECK(is_crosscut(h, *sig.witness));
      CHECK(*tau.size() <= *sig.size());
    }
  }
}

TEST_CASE("smallest witness is lexicographically first") {
  auto h = Hypergraph::from_lists(6, 2, {{1, 4}, {2, 5}, {3, 6}});
  CHECK(min_vertex_cover(h).witness == make_set({1, 2, 3}));
}

TEST_CASE("double star separates tau and sigma") {
  auto ds = BipartiteGraph::double_star(3, 3);
  auto g = blowup(ds, 1, 1).graph;
  CHECK(min_vertex_cover(g).size() == 2);
  CHECK(min_crosscut(g).size() == 4);
  auto g21 = blowup(ds, 2, 1).graph;
  CHECK(min_vertex_cover(g21).size() == 2);
  CHECK(min_crosscut(g21).size() == 4);
}

TEST_CASE("crosscut of tree blowups is the smaller part") {
  for (int n = 2; n <= 7; ++n)
    for (int s = 1; s < n; ++s) {
      const int t = n - s;
      for (const auto& tree : trees_with_parts(s, t))
        for (auto [a, b] : {std::pair{1, 1}, {2, 1}, {3, 2}}) {
          auto g = blowup(tree, a, b).graph;
          CHECK(min_crosscut(g).size() == std::min(s, t));
        }
    }
}

TEST_CASE("critical leaf examples") {
  // path with 3 edges: u1 v1 u2 v2, the V-side leaf v2
  auto p3 = BipartiteGraph::path(3);
  CHECK(critical_leaves(p3, 1, 1) == std::vector<int>{2});
  CHECK(critical_leaves(BipartiteGraph::path(4), 1, 1).empty());
  CHECK(critical_leaves(BipartiteGraph::star(3), 1, 1).empty());
  CHECK(critical_leaves(BipartiteGraph::star(1), 2, 1) == std::vector<int>{1});
  CHECK_THROWS_AS(critical_leaves(BipartiteGraph::cycle(4), 1, 1), ParameterError);
}

TEST_CASE("critical leaves are the V-leaves when t <= s") {
  for (int n = 3; n <= 7; ++n)
    for (int t = 1; 2 * t <= n; ++t) {
      const int s = n - t;
      for (const auto& tree : trees_with_parts(s, t)) {
        std::vector<int> leaves;
        for (int v = 1; v <= t; ++v)
          if (tree.degree_v(v) == 1) leaves.push_back(v);
        CHECK(critical_leaves(tree, 2, 1) == leaves);
      }
    }
}
