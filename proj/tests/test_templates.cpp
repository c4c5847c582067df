#include <doctest.h>

#include <cmath>

#include "hgx/constructions.hpp"
#include "hgx/error.hpp"
#include "hgx/random.hpp"
#include "hgx/templates.hpp"
#include "oracles.hpp"

using namespace hgx;

namespace {

EdgeSet family(int p, std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<VertexSet> m;
  for (auto s : sets) m.push_back(make_set(s));
  return EdgeSet(p, m);
}

}  // namespace

TEST_CASE("incidence examples") {
  auto host = Hypergraph::from_lists(3, 3, {{1, 2, 3}});
  auto inc = incidence(host, {family(2, {{1, 2}}), family(1, {{3}}), 2, 1});
  CHECK(inc.H0.size() == 1);
  CHECK(inc.H1 == host);
  auto none = incidence(host, {EdgeSet(2, {}), family(1, {{3}}), 2, 1});
  CHECK(none.H0.size() == 0);
  CHECK(none.H1.empty());
  auto k6 = psi(6, 3, 6);
  auto full = incidence(k6, {family(2, {{1, 2}, {3, 4}}), family(1, {{5}, {6}}), 2, 1});
  CHECK(full.H0.size() == 4);
  CHECK(full.H1.size() == 4);
}

TEST_CASE("incidence rejects malformed templates") {
  auto k6 = psi(6, 3, 6);
  CHECK_THROWS_AS(incidence(k6, {family(2, {{1, 2}}), family(2, {{3, 4}}), 2, 2}), ParameterError);
  CHECK_THROWS_AS(incidence(k6, {family(2, {{1, 2}}), family(1, {{2}}), 2, 1}), ParameterError);
  CHECK_THROWS_AS(incidence(k6, {family(1, {{1}}), family(2, {{2, 3}, {3, 4}}), 1, 2}), ParameterError);
}

TEST_CASE("incidence sizes") {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<VertexSet> e;
    for (VertexSet s : all_subsets(9, 3))
      if (rng.coin(0.5)) e.push_back(s);
    Hypergraph host(9, 3, e);
    // A: arbitrary pairs of {1..5}; B: singletons of {6..9}
    std::vector<VertexSet> a, b;
    for (VertexSet s : all_subsets(5, 2))
      if (rng.coin(0.4)) a.push_back(s);
    for (int v = 6; v <= 9; ++v)
      if (rng.coin(0.7)) b.push_back(vertex_bit(v));
    Template T{EdgeSet(2, a), EdgeSet(1, b), 2, 1};
    auto inc = incidence(host, T);
    std::size_t pairs = 0;
    std::set<VertexSet> unions;
    for (VertexSet x : a)
      for (VertexSet y : b)
        if (host.has_edge(x | y)) ++pairs, unions.insert(x | y);
    CHECK(inc.H0.size() == pairs);
    CHECK(inc.H1.size() == unions.size());
    CHECK(inc.H1.size() <= inc.H0.size());
    if (is_matching(T.A)) CHECK(inc.H0.size() == inc.H1.size());
  }
}

TEST_CASE("template bound examples") {
  auto k8 = psi(8, 3, 8);
  Template T{family(2, {{1, 2}, {3, 4}}), family(1, {{5}, {6}, {7}}), 2, 1};
  auto rep = verify_template_bound(k8, T, 2, 2, trees_with_parts(2, 2));
  CHECK(rep.exceeded);
  CHECK(rep.h1_size == 6);
  CHECK(rep.bound == 5);
  CHECK(rep.all_embedded());
  CHECK(rep.summary() == "1/1 trees embedded");
  auto sparse = Hypergraph::from_lists(8, 3, {{1, 2, 5}});
  auto low = verify_template_bound(sparse, T, 2, 2, trees_with_parts(2, 2));
  CHECK_FALSE(low.exceeded);
  CHECK(low.outcomes.empty());
  CHECK(low.summary() == "bound satisfied");
}

TEST_CASE("template bound fuzz") {
  Rng rng(1000);
  int exceeded = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 10 + static_cast<int>(rng.below(11));
    std::vector<VertexSet> e;
    const double p = rng.uniform();
    for (VertexSet s : all_subsets(n, 3))
      if (rng.coin(p)) e.push_back(s);
    Hypergraph host(n, 3, e);
    std::vector<int> perm;
    for (int v = 1; v <= n; ++v) perm.push_back(v);
    rng.shuffle(perm);
    const int na = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n / 3)));
    std::vector<VertexSet> a, b;
    for (int i = 0; i < na; ++i) a.push_back(vertex_bit(perm[2 * i]) | vertex_bit(perm[2 * i + 1]));
    for (int i = 2 * na; i < n; ++i) b.push_back(vertex_bit(perm[i]));
    const bool wide = rng.coin(0.5);
    const int s = wide ? 3 : 2, t = 2;
    auto rep = verify_template_bound(host, {EdgeSet(2, a), EdgeSet(1, b), 2, 1}, s, t, trees_with_parts(s, t));
    if (!rep.exceeded) continue;
    ++exceeded;
    CHECK(rep.all_embedded());
  }
  CHECK(exceeded > 20);
}

TEST_CASE("heavy sets examples") {
  auto hs = heavy_sets(psi1(10, 3, 1), 2, 1);
  CHECK(hs.D.empty());
  CHECK(hs.L == 0);
  auto h2 = heavy_sets(psi1(12, 3, 2), 2, 3);
  CHECK_FALSE(h2.D.empty());
  for (VertexSet d : h2.D.edges()) CHECK((d & make_set({1, 2})) != 0);
  CHECK(is_subset(h2.L, make_set({1, 2})));
  auto empty = heavy_sets(Hypergraph(6, 3), 2, 1);
  CHECK(empty.D.empty());
  CHECK(empty.L == 0);
  CHECK_THROWS_AS(heavy_sets(psi(6, 3, 1), 3, 1), ParameterError);
}

TEST_CASE("heavy sets threshold by enumeration") {
  auto host = psi1(12, 3, 2);
  const double threshold = 12.0 / 3.0;
  std::size_t want = 0;
  for (const auto& pair : oracle::subsets(12, 2)) {
    std::size_t d = 0;
    for (const auto& e : oracle::lists(host)) d += oracle::contains_set(e, pair);
    want += d >= threshold;
  }
  CHECK(heavy_sets(host, 2, 3).D.size() == want);
}

TEST_CASE("near crosscut extraction") {
  auto host = psi1(12, 3, 2);
  auto nc = extract_near_crosscut(host, 2, 3);
  CHECK(nc.L == make_set({1, 2}));
  CHECK(nc.F == host);
  auto none = extract_near_crosscut(Hypergraph::from_lists(12, 3, {{1, 2, 3}}), 2, 1);
  CHECK(none.L == 0);
  CHECK(none.F.empty());
  auto star = extract_near_crosscut(psi(12, 3, 1), 2, 2);
  CHECK(star.L == make_set({1}));
  CHECK(star.F == psi(12, 3, 1));
  Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<VertexSet> e;
    for (VertexSet s : all_subsets(10, 3))
      if (rng.coin(0.6) && (s & 3)) e.push_back(s);
    auto f = extract_near_crosscut(Hypergraph(10, 3, e), 2, 1.5);
    for (VertexSet x : f.F.edges()) CHECK(set_size(x & f.L) == 1);
  }
}

TEST_CASE("sampler extremes") {
  auto host = psi(12, 3, 12);
  auto none = sample_template(host, 2, {0.0, 2, 1, 1}, 0);
  CHECK(none.R == 0);
  CHECK(none.T.A.empty());
  CHECK(incidence(host, none.T).H1.empty());
  CHECK(none.T.B.size() == 12);
  auto all = sample_template(host, 2, {1.0, 2, 1, 1}, 0);
  CHECK(all.T.B.empty());
  CHECK(all.T.A.size() == 66);
  auto odd = sample_template(psi(11, 4, 11), 2, {0.0, 2, 1, 1}, 0);
  CHECK(odd.dropped == vertex_bit(11));
  CHECK(odd.T.B.size() == 5);
  CHECK(is_matching(odd.T.B));
}

TEST_CASE("sampler split by L") {
  auto host = psi1(12, 3, 2);
  auto st = sample_template(host, 2, {0.3, 3, 9, 1}, make_set({1, 2}));
  CHECK((st.R & make_set({1, 2})) == 0);
  CHECK(st.B0.size() + st.B1.size() == st.T.B.size());
  for (VertexSet x : st.B0.members) CHECK((x & make_set({1, 2})) == 0);
  for (VertexSet x : st.B1.members) CHECK((x & make_set({1, 2})) != 0);
  for (VertexSet x : st.T.B.members) CHECK((x & st.R) == 0);
}

TEST_CASE("sampler is deterministic") {
  auto host = psi(12, 3, 3);
  SamplerParams p{0.3, 2, 42, 1};
  auto a = sample_template(host, 2, p, 0);
  auto b = sample_template(host, 2, p, 0);
  CHECK(a.R == b.R);
  CHECK(a.T.A == b.T.A);
  CHECK(a.T.B == b.T.B);
  // golden values recorded from the first run
  CHECK(a.R == 0x528);
  CHECK(a.T.B.size() == 8);
  CHECK(a.T.A.size() == 6);
}

TEST_CASE("sampler inclusion rate") {
  auto host = psi(20, 3, 3);
  const VertexSet L = make_set({1, 2, 3});
  const double p = 0.3;
  const int trials = 1000;
  double sum = 0, sq = 0;
  for (int seed = 0; seed < trials; ++seed) {
    const double k = set_size(sample_template(host, 2, {p, 2, static_cast<std::uint64_t>(seed), 1}, L).R);
    sum += k;
    sq += k * k;
  }
  const double mean = sum / trials;
  const double sd = std::sqrt(sq / trials - mean * mean);
  const double expected = p * 17;
  CHECK(std::abs(mean - expected) <= 5 * sd / std::sqrt(trials));
}

TEST_CASE("diagnostics") {
  auto d = template_diagnostics(100, 3, 2, 2, {0.1, 30, 0, 0.5});
  CHECK(d.beta0 == doctest::Approx(2 * 2 * 0.5 * 100));
  CHECK(d.beta1 == doctest::Approx(400));
  CHECK(d.p0 == doctest::Approx(3 * 0.01 * 0.9));
  CHECK(d.p0 == doctest::Approx(3.0 * 0.9 * d.p1));
  CHECK(d.m_above_r_to_r);
  CHECK_FALSE(d.m_below_sqrt_n);
  CHECK(d.alpha_below_one_over_r);
}
