#include <doctest.h>

#include "hgx/canonical.hpp"
#include "hgx/constructions.hpp"
#include "hgx/embedding.hpp"
#include "hgx/error.hpp"
#include "oracles.hpp"

using namespace hgx;

TEST_CASE("psi and psi1 examples") {
  CHECK(psi(6, 3, 2).size() == 16);
  CHECK(psi(6, 3, 0).empty());
  CHECK(psi(6, 3, 6).size() == 20);
  CHECK(psi1(6, 3, 2).size() == 12);
  CHECK(psi1(6, 3, 0).empty());
  CHECK(psi1(7, 3, 1).size() == 15);
  CHECK_THROWS_AS(psi(6, 3, 7), ParameterError);
  CHECK_THROWS_AS(psi1(6, 3, 5), ParameterError);
}

TEST_CASE("psi sizes against enumeration") {
  for (int n = 1; n <= 14; ++n)
    for (int r = 1; r <= std::min(5, n); ++r)
      for (int c = 0; c <= std::min(4, n); ++c) {
        std::size_t meet = 0, once = 0;
        for (const auto& e : oracle::subsets(n, r)) {
          const auto k = std::count_if(e.begin(), e.end(), [&](int v) { return v <= c; });
          meet += k >= 1;
          once += k == 1;
        }
        auto p = psi(n, r, c);
        CHECK(p.size() == meet);
        CHECK(p.size() == oracle::choose(n, r) - oracle::choose(n - c, r));
        if (r <= n - c + 1) {
          auto q = psi1(n, r, c);
          CHECK(q.size() == once);
          CHECK(q.size() == c * oracle::choose(n - c, r - 1));
          for (VertexSet e : q.edges()) CHECK(p.has_edge(e));
        }
      }
}

TEST_CASE("blowup examples") {
  auto one = blowup(BipartiteGraph(1, 1, {{1, 1}}), 2, 1);
  CHECK(one.graph == Hypergraph::from_lists(3, 3, {{1, 2, 3}}));
  auto p5 = blowup(BipartiteGraph::path(5), 3, 2);
  CHECK(p5.graph.size() == 5);
  CHECK(p5.graph.n() == 15);
  auto c4 = blowup(BipartiteGraph::cycle(4), 2, 1);
  CHECK(c4.graph.size() == 4);
  CHECK(c4.graph.n() == 6);
  CHECK(c4.u_blocks == std::vector<VertexSet>{make_set({1, 2}), make_set({3, 4})});
  CHECK(c4.v_blocks == std::vector<VertexSet>{make_set({5}), make_set({6})});
  CHECK(isomorphic(c4.graph, c4_blowup(2, 1)));
}

TEST_CASE("path blowups share alternate blocks") {
  auto p = ab_path(5, 3, 2);
  std::vector<VertexSet> e(p.edges().begin(), p.edges().end());
  // interval layout: consecutive edges in label order
  std::sort(e.begin(), e.end(), [](VertexSet x, VertexSet y) { return std::countr_zero(x) < std::countr_zero(y); });
  for (std::size_t i = 0; i + 1 < e.size(); ++i) CHECK(set_size(e[i] & e[i + 1]) == (i % 2 == 0 ? 2 : 3));
  for (std::size_t i = 0; i + 2 < e.size(); ++i) CHECK((e[i] & e[i + 2]) == 0);
}

TEST_CASE("ab_path matches the blown-up path") {
  for (int ell = 1; ell <= 6; ++ell)
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) {
        auto direct = ab_path(ell, a, b);
        auto blown = blowup(BipartiteGraph::path(ell), a, b).graph;
        CHECK(canonical_form(compacted(direct)) == canonical_form(compacted(blown)));
      }
}

TEST_CASE("ab_path symmetry in a and b") {
  CHECK(ab_path(2, 1, 2).size() == 2);
  CHECK(set_size(ab_path(2, 1, 2).edges()[0] & ab_path(2, 1, 2).edges()[1]) == 2);
  CHECK(isomorphic(ab_path(5, 3, 2), ab_path(5, 2, 3)));
  CHECK_FALSE(isomorphic(ab_path(4, 2, 1), ab_path(4, 1, 2)));
  CHECK(oracle::isomorphic(compacted(ab_path(3, 2, 1)), compacted(ab_path(3, 1, 2))));
  CHECK_FALSE(oracle::isomorphic(compacted(ab_path(4, 2, 1)), compacted(ab_path(4, 1, 2))));
}

TEST_CASE("tight and loose paths") {
  CHECK(tight_path(1, 3) == Hypergraph::from_lists(3, 3, {{1, 2, 3}}));
  CHECK(tight_path(3, 3) == Hypergraph::from_lists(5, 3, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}}));
  CHECK(loose_path(2, 3) == Hypergraph::from_lists(5, 3, {{1, 2, 3}, {3, 4, 5}}));
  CHECK(loose_path(4, 3).n() == 9);
  for (int ell = 1; ell <= 8; ++ell)
    for (int r = 2; r <= 8; ++r) {
      auto t = tight_path(ell, r);
      std::vector<VertexSet> e(t.edges().begin(), t.edges().end());
      std::sort(e.begin(), e.end(), [](VertexSet x, VertexSet y) { return std::countr_zero(x) < std::countr_zero(y); });
      for (std::size_t i = 0; i + 1 < e.size(); ++i) CHECK(set_size(e[i] & e[i + 1]) == r - 1);
      CHECK(is_tight_tree(t).is_tight_tree);
      auto l = loose_path(ell, r);
      CHECK(l.n() == ell * (r - 1) + 1);
      std::vector<VertexSet> f(l.edges().begin(), l.edges().end());
      std::sort(f.begin(), f.end(), [](VertexSet x, VertexSet y) { return std::countr_zero(x) < std::countr_zero(y); });
      for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j) CHECK(set_size(f[i] & f[j]) == (j == i + 1 ? 1 : 0));
      if (r >= 3 && ell >= 2) CHECK_FALSE(is_tight_tree(l).is_tight_tree);
    }
}

TEST_CASE("trees with parts examples") {
  auto one = trees_with_parts(1, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].size() == 1);
  auto star = trees_with_parts(3, 1);
  REQUIRE(star.size() == 1);
  CHECK(star[0].degree_v(1) == 3);
  auto p3 = trees_with_parts(2, 2);
  REQUIRE(p3.size() == 1);
  CHECK(oracle::bipartite_form(p3[0]) == oracle::bipartite_form(BipartiteGraph::path(3)));
  CHECK_THROWS_AS(trees_with_parts(6, 5), UnsupportedSize);
}

TEST_CASE("trees with parts against Pruefer enumeration") {
  for (int n = 2; n <= 7; ++n)
    for (int s = 1; s < n; ++s) {
      const int t = n - s;
      auto trees = trees_with_parts(s, t);
      std::set<std::vector<std::pair<int, int>>> got;
      for (const auto& tr : trees) {
        CHECK(tr.is_tree());
        CHECK(tr.s() == s);
        CHECK(tr.t() == t);
        got.insert(oracle::bipartite_form(tr));
      }
      CHECK(got.size() == trees.size());
      CHECK(got == oracle::pruefer_trees(s, t));
    }
}

TEST_CASE("pruefer decoding") {
  auto path = BipartiteGraph::from_pruefer({2, 3});  // 1-2-3-4
  CHECK(path.is_tree());
  CHECK(path.s() == 2);
  CHECK(oracle::bipartite_form(path) == oracle::bipartite_form(BipartiteGraph::path(3)));
}

TEST_CASE("no-stability construction") {
  auto h = no_stability_example(6, 3);
  CHECK(h.size() == 6);
  for (int n = 5; n <= 12; ++n) {
    auto g = no_stability_example(n, 3);
    CHECK(g.size() == oracle::choose(n - 2, 2));
    for (VertexSet e : g.edges()) CHECK(set_size(e & make_set({1, 2})) == 1);
    for (VertexSet e : g.edges()) {
      const VertexSet rest = e & ~make_set({1, 2});
      int sum = 0;
      for (int v : to_vertices(rest)) sum += v;
      CHECK((e & vertex_bit(1)) == (sum % 2 == 0 ? vertex_bit(1) : 0));
    }
  }
  auto seeded = no_stability_example(9, 3, 17);
  CHECK(seeded.size() == 21);
  CHECK(seeded == no_stability_example(9, 3, 17));
  CHECK_THROWS_AS(no_stability_example(4, 3), ParameterError);
}

TEST_CASE("fano plane") {
  auto f = fano_plane();
  CHECK(f.size() == 7);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j) CHECK(set_size(f.edges()[i] & f.edges()[j]) == 1);
}

TEST_CASE("builtin patterns") {
  auto p = builtin_pattern("path:3:2:1");
  CHECK(p.graph.size() == 3);
  REQUIRE(p.blowup.has_value());
  CHECK(p.blowup->a == 2);
  CHECK(isomorphic(p.graph, ab_path(3, 2, 1)));
  CHECK(builtin_pattern("tightpath:3:3").graph == tight_path(3, 3));
  CHECK(builtin_pattern("loosepath:2:3").graph == loose_path(2, 3));
  CHECK(isomorphic(builtin_pattern("c4:2:1").graph, c4_blowup(2, 1)));
  auto t = builtin_pattern("tree:2,3:1:1");
  CHECK(t.graph.size() == 3);
  CHECK(builtin_pattern("tree::2:1").graph.size() == 1);
  CHECK_THROWS_AS(builtin_pattern("nonsense"), ParameterError);
  CHECK_THROWS_AS(builtin_pattern("path:x:1:1"), ParameterError);
}
