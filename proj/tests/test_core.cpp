#include <doctest.h>

#include "hgx/canonical.hpp"
#include "hgx/constructions.hpp"
#include "hgx/error.hpp"
#include "hgx/hypergraph.hpp"
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

Hypergraph permuted(const Hypergraph& h, Rng& rng) {
  std::vector<int> perm(h.n() + 1);
  for (int v = 0; v <= h.n(); ++v) perm[v] = v;
  std::vector<int> tail(perm.begin() + 1, perm.end());
  rng.shuffle(tail);
  std::copy(tail.begin(), tail.end(), perm.begin() + 1);
  return h.relabeled(perm);
}

}  // namespace

TEST_CASE("hypergraph validation") {
  CHECK_THROWS_AS(Hypergraph(2, 3), ParameterError);
  CHECK_THROWS_AS(Hypergraph(3, 0), ParameterError);
  CHECK_THROWS_AS(Hypergraph(65, 2), UnsupportedSize);
  CHECK_THROWS_AS(Hypergraph::from_lists(4, 3, {{1, 2}}), ParameterError);
  CHECK_THROWS_AS(Hypergraph::from_lists(4, 2, {{1, 5}}), ParameterError);
  auto h = Hypergraph::from_lists(4, 2, {{3, 4}, {1, 2}, {1, 2}});
  CHECK(h.size() == 2);
  CHECK(h.has_edge(make_set({1, 2})));
  CHECK(h.degree(1) == 1);
  CHECK(h.support() == make_set({1, 2, 3, 4}));
}

TEST_CASE("subset enumeration is colex and complete") {
  for (int n = 0; n <= 9; ++n)
    for (int k = 0; k <= n; ++k) {
      auto s = all_subsets(n, k);
      CHECK(s.size() == oracle::choose(n, k));
      CHECK(std::is_sorted(s.begin(), s.end()));
      CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
    }
  CHECK(binomial(64, 32) == 1832624140942590534ULL);
  CHECK(binomial(5, 7) == 0);
}

TEST_CASE("shadow examples") {
  auto one = Hypergraph::from_lists(3, 3, {{1, 2, 3}});
  CHECK(shadow(one, 2) == EdgeSet(2, {make_set({1, 2}), make_set({1, 3}), make_set({2, 3})}));
  CHECK(shadow(Hypergraph(5, 3), 1).empty());
  CHECK(shadow(fano_plane(), 2).size() == 21);
  CHECK_THROWS_AS(shadow(one, 0), ParameterError);
  CHECK_THROWS_AS(shadow(one, 4), ParameterError);
}

TEST_CASE("shadow against enumeration") {
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + static_cast<int>(rng.below(4));
    const int r = 2 + static_cast<int>(rng.below(2));
    auto h = random_graph(rng, n, r, 0.3);
    CHECK(shadow(h, r).size() == h.size());
    for (int p = 1; p <= r; ++p) {
      auto want = oracle::shadow(oracle::lists(h), p, n);
      auto got = shadow(h, p);
      CHECK(got.size() == want.size());
      CHECK(got.size() <= oracle::choose(n, p));
    }
  }
}

TEST_CASE("shadow is monotone under insertion") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto h = random_graph(rng, 7, 3, 0.2);
    std::vector<VertexSet> more(h.edges().begin(), h.edges().end());
    more.push_back(all_subsets(7, 3)[rng.below(35)]);
    auto bigger = Hypergraph(7, 3, more);
    auto small = shadow(h, 2);
    auto big = shadow(bigger, 2);
    for (VertexSet s : small.members) CHECK(big.contains(s));
  }
}

TEST_CASE("neighborhood examples") {
  auto star = psi(5, 3, 1);
  auto g = neighborhood(star, make_set({1}));
  CHECK(g.size() == 6);
  CHECK(g.vertex_union() == make_set({2, 3, 4, 5}));
  auto h = Hypergraph::from_lists(5, 3, {{1, 2, 3}, {1, 2, 4}});
  CHECK(neighborhood(h, make_set({1, 2})) == EdgeSet(1, {make_set({3}), make_set({4})}));
  CHECK(degree(h, make_set({1, 2})) == 2);
  CHECK(neighborhood(h, make_set({4, 5})).empty());
  CHECK_THROWS_AS(neighborhood(h, make_set({1, 2, 3})), ParameterError);
  CHECK_THROWS_AS(neighborhood(h, 0), ParameterError);
}

TEST_CASE("codegree matches direct counting") {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    auto h = random_graph(rng, 7, 3, 0.4);
    auto fam = oracle::lists(h);
    for (const auto& pair : oracle::subsets(7, 2)) {
      std::size_t count = 0;
      for (const auto& e : fam) count += oracle::contains_set(e, pair);
      CHECK(degree(h, make_set({pair[0], pair[1]})) == count);
    }
  }
}

TEST_CASE("matching predicate") {
  CHECK(is_matching(EdgeSet(2, {make_set({1, 2}), make_set({3, 4})})));
  CHECK_FALSE(is_matching(EdgeSet(2, {make_set({1, 2}), make_set({2, 3})})));
  CHECK(is_matching(EdgeSet{}));
}

TEST_CASE("canonical form examples") {
  auto two_triangles = Hypergraph::from_lists(6, 2, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}});
  CHECK(canonical_form(two_triangles) != canonical_form(psi1(6, 2, 1)));
  // same edge count: a 6-edge star against two triangles, both on 7 vertices
  auto star = psi1(7, 2, 1);
  auto tri7 = two_triangles.with_vertex_count(7);
  CHECK(tri7.size() == star.size());
  CHECK(canonical_form(tri7) != canonical_form(star));
  CHECK(canonical_form(Hypergraph(5, 3)) == canonical_form(Hypergraph(5, 3)));
  CHECK(canonical_form(Hypergraph(5, 3)) != canonical_form(Hypergraph(6, 3)));
  CHECK_THROWS_AS(canonical_form(Hypergraph(33, 2)), UnsupportedSize);
}

TEST_CASE("canonical form is permutation invariant") {
  Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(8));
    const int r = 2 + static_cast<int>(rng.below(2));
    auto h = random_graph(rng, n, r, 0.15 + 0.5 * rng.uniform());
    CHECK(canonical_form(h) == canonical_form(permuted(h, rng)));
  }
}

TEST_CASE("canonical form separates exactly the isomorphism classes") {
  Rng rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 5 + static_cast<int>(rng.below(2));
    auto a = random_graph(rng, n, 3, 0.25);
    auto b = random_graph(rng, n, 3, 0.25);
    if (a.size() != b.size()) continue;
    CHECK((canonical_form(a) == canonical_form(b)) == oracle::isomorphic(a, b));
  }
}

TEST_CASE("canonical labeling maps onto the form") {
  auto h = ab_path(4, 2, 1);
  auto cl = canonical_labeling(h);
  auto relabeled = h.relabeled(cl.labeling);
  CHECK(canonical_form(relabeled) == cl.form);
}

TEST_CASE("compacted drops isolated vertices") {
  auto h = Hypergraph::from_lists(9, 2, {{3, 7}});
  auto c = compacted(h);
  CHECK(c.n() == 2);
  CHECK(c.has_edge(make_set({1, 2})));
  CHECK(isomorphic(h, Hypergraph::from_lists(4, 2, {{1, 4}})));
}

TEST_CASE("rng is reproducible") {
  Rng a(42), b(42);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
  Rng c(5489);
  for (int i = 1; i < 10000; ++i) c.next();
  CHECK(c.next() == 9981545732273789042ULL);
}
