#include <doctest.h>

#include "hgx/canonical.hpp"
#include "hgx/constructions.hpp"
#include "hgx/covers.hpp"
#include "hgx/embedding.hpp"
#include "hgx/error.hpp"
#include "hgx/random.hpp"
#include "oracles.hpp"

using namespace hgx;

namespace {

Hypergraph random_graph(Rng& rng, int n, int r, double p) {
  std::vector<VertexSet> edges;
  for (VertexSet e : all_subsets(n, r))
    if (rng.coin(p)) edges.push_back(e);
  return Hypergraph(n, r, edges);
}

BipartiteGraph random_tree(Rng& rng, int max_vertices) {
  const int n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_vertices - 1)));
  std::vector<int> seq;
  for (int i = 0; i + 2 < n; ++i) seq.push_back(1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
  return BipartiteGraph::from_pruefer(seq);
}

}  // namespace

TEST_CASE("contains examples") {
  auto p3 = ab_path(3, 2, 1);
  CHECK_FALSE(contains(psi1(9, 3, 1), p3).found());
  auto k6 = psi(6, 3, 6);
  auto res = contains(k6, p3);
  REQUIRE(res.found());
  CHECK(validate_embedding(k6, p3, *res.embedding));
  auto hand = Hypergraph::from_lists(6, 3, {{1, 2, 3}, {3, 4, 5}, {4, 5, 6}});
  CHECK(contains(hand, p3).found());
  CHECK_THROWS_AS(contains(k6, ab_path(2, 1, 1)), ParameterError);
}

TEST_CASE("star avoids every blowup with cover number two") {
  auto host = psi(12, 3, 1);
  for (int n = 2; n <= 6; ++n)
    for (int s = 1; s < n; ++s)
      for (const auto& tree : trees_with_parts(s, n - s))
        for (auto [a, b] : {std::pair{2, 1}, {1, 2}}) {
          auto g = blowup(tree, a, b).graph;
          if (min_vertex_cover(g).size() < 2) continue;
          CHECK_FALSE(contains(host, g).found());
        }
}

TEST_CASE("contains agrees with brute force") {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 5 + static_cast<int>(rng.below(3));
    auto host = random_graph(rng, n, 3, 0.1 + 0.4 * rng.uniform());
    std::vector<VertexSet> pe;
    const int k = 1 + static_cast<int>(rng.below(3));
    auto pool = all_subsets(6, 3);
    while (static_cast<int>(pe.size()) < k) {
      VertexSet e = pool[rng.below(pool.size())];
      if (std::find(pe.begin(), pe.end(), e) == pe.end()) pe.push_back(e);
    }
    Hypergraph pattern(6, 3, pe);
    auto res = contains(host, pattern);
    CHECK(res.found() == oracle::contains(oracle::lists(host), n, oracle::lists(pattern)));
    if (res.found()) CHECK(validate_embedding(host, pattern, *res.embedding));
  }
}

TEST_CASE("budget exhaustion is distinct from absence") {
  auto host = no_stability_example(9, 3);
  auto res = contains(host, ab_path(4, 2, 1), SearchLimits{5});
  CHECK(res.status == SearchStatus::kBudgetExhausted);
  CHECK_FALSE(res.found());
  CHECK(std::string(to_string(res.status)) == "budget-exhausted");
}

TEST_CASE("blowup search examples") {
  auto host = psi1(10, 3, 2);
  for (int s = 3; s <= 4; ++s)
    for (const auto& tree : trees_with_parts(s, 3)) CHECK_FALSE(contains_blowup(host, tree, 2, 1).found());
  for (int n = 2; n <= 6; ++n)
    for (int s = 1; s < n; ++s)
      for (const auto& tree : trees_with_parts(s, n - s)) {
        auto b = blowup(tree, 2, 1);
        auto res = contains_blowup(b.graph, tree, 2, 1);
        REQUIRE(res.found());
        CHECK(validate_block_embedding(b.graph, tree, 2, 1, *res.embedding));
      }
}

TEST_CASE("blowup search agrees with generic search") {
  Rng rng(300);
  int found = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 6 + static_cast<int>(rng.below(5));
    auto host = random_graph(rng, n, 3, 0.05 + 0.3 * rng.uniform());
    auto tree = random_tree(rng, 5);
    const bool swap = rng.coin(0.5);
    const int a = swap ? 1 : 2, b = swap ? 2 : 1;
    auto pattern = blowup(tree, a, b).graph;
    auto gen = contains(host, pattern);
    auto blk = contains_blowup(host, tree, a, b);
    CHECK(gen.found() == blk.found());
    if (blk.found()) {
      ++found;
      CHECK(validate_block_embedding(host, tree, a, b, *blk.embedding));
    }
  }
  CHECK(found > 30);
  CHECK(found < 270);
}

TEST_CASE("tight tree predicate") {
  CHECK(is_tight_tree(tight_path(4, 3)).is_tight_tree);
  CHECK_FALSE(is_tight_tree(loose_path(2, 3)).is_tight_tree);
  CHECK_FALSE(is_tight_tree(Hypergraph::from_lists(6, 3, {{1, 2, 3}, {4, 5, 6}})).is_tight_tree);
  // a tight tree that is not a path: three edges hanging off one
  auto fan = Hypergraph::from_lists(6, 3, {{1, 2, 3}, {1, 2, 4}, {2, 3, 5}, {1, 3, 6}});
  auto res = is_tight_tree(fan);
  REQUIRE(res.is_tight_tree);
  CHECK(res.order.size() == 4);
  // every edge after the first meets the earlier union in r-1 vertices inside one earlier edge
  VertexSet seen = res.order[0];
  for (std::size_t i = 1; i < res.order.size(); ++i) {
    const VertexSet meet = res.order[i] & seen;
    CHECK(set_size(meet) == 2);
    bool inside = false;
    for (std::size_t j = 0; j < i; ++j) inside |= is_subset(meet, res.order[j]);
    CHECK(inside);
    seen |= res.order[i];
  }
  // a cycle of tight edges closes up and fails
  CHECK_FALSE(is_tight_tree(Hypergraph::from_lists(4, 3, {{1, 2, 3}, {2, 3, 4}, {1, 3, 4}})).is_tight_tree);
}

TEST_CASE("greedy tight tree examples") {
  auto k7 = psi(7, 3, 7);
  auto e = greedy_tight_tree(k7, tight_path(3, 3));
  REQUIRE(e.has_value());
  CHECK(validate_embedding(k7, tight_path(3, 3), *e));
  CHECK_FALSE(greedy_tight_tree(Hypergraph::from_lists(3, 3, {{1, 2, 3}}), tight_path(2, 3)).has_value());
  CHECK_THROWS_AS(greedy_tight_tree(k7, loose_path(2, 3)), ParameterError);
}

TEST_CASE("greedy tight tree above the shadow bound") {
  Rng rng(500);
  int exercised = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 4 + static_cast<int>(rng.below(6));
    auto g = random_graph(rng, n, 3, rng.uniform());
    for (int ell = 2; ell <= 3; ++ell) {
      const auto sh = shadow(g, 2).size();
      if (g.size() <= static_cast<std::size_t>(ell - 1) * sh) continue;
      ++exercised;
      CHECK_FALSE(prune_low_codegree(g, ell).empty());
      auto emb = greedy_tight_tree(g, tight_path(ell, 3));
      REQUIRE(emb.has_value());
      CHECK(validate_embedding(g, tight_path(ell, 3), *emb));
    }
  }
  CHECK(exercised > 50);
}

TEST_CASE("tree grower examples") {
  for (int s = 1; s <= 3; ++s)
    for (int t = 1; t <= 3; ++t) {
      std::vector<BipartiteGraph::Edge> all;
      for (int u = 1; u <= s; ++u)
        for (int v = 1; v <= t; ++v) all.push_back({u, v});
      BipartiteGraph complete(s, t, all);
      for (const auto& tree : trees_with_parts(s, t)) {
        auto e = grow_tree_in_bipartite(complete, tree);
        REQUIRE(e.has_value());
        CHECK(e->u_to_a.size() == static_cast<std::size_t>(s));
        for (auto [u, v] : tree.edges()) CHECK(complete.has_edge(e->u_to_a[u - 1], e->v_to_b[v - 1]));
      }
    }
  CHECK_FALSE(grow_tree_in_bipartite(BipartiteGraph(3, 3), BipartiteGraph::path(3)).has_value());
}

TEST_CASE("tree grower succeeds on every nonempty core") {
  Rng rng(301);
  int cores = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int na = 2 + static_cast<int>(rng.below(8));
    const int nb = 2 + static_cast<int>(rng.below(8));
    const double p = rng.uniform();
    std::vector<BipartiteGraph::Edge> edges;
    for (int u = 1; u <= na; ++u)
      for (int v = 1; v <= nb; ++v)
        if (rng.coin(p)) edges.push_back({u, v});
    BipartiteGraph h0(na, nb, edges);
    const int s = 1 + static_cast<int>(rng.below(3));
    const int t = 1 + static_cast<int>(rng.below(3));
    const bool nonempty = oracle::core_nonempty(h0, t, s);
    CHECK(nonempty == !min_degree_core(h0, t, s).empty());
    if (!nonempty) continue;
    ++cores;
    for (const auto& tree : trees_with_parts(s, t)) {
      auto e = grow_tree_in_bipartite(h0, tree);
      REQUIRE(e.has_value());
      std::set<int> ua(e->u_to_a.begin(), e->u_to_a.end()), vb(e->v_to_b.begin(), e->v_to_b.end());
      CHECK(ua.size() == static_cast<std::size_t>(s));
      CHECK(vb.size() == static_cast<std::size_t>(t));
      for (auto [u, v] : tree.edges()) CHECK(h0.has_edge(e->u_to_a[u - 1], e->v_to_b[v - 1]));
    }
  }
  CHECK(cores > 30);
}

TEST_CASE("host index add and remove") {
  HostIndex idx(6, 3);
  idx.add(make_set({1, 2, 3}));
  idx.add(make_set({2, 3, 4}));
  CHECK(idx.size() == 2);
  CHECK(idx.degree(2) == 2);
  idx.remove(make_set({2, 3, 4}));
  CHECK_FALSE(idx.has(make_set({2, 3, 4})));
  CHECK(idx.degree(4) == 0);
}
