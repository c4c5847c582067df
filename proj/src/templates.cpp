#include "hgx/templates.hpp"

#include <algorithm>
#include <cmath>

#include "hgx/covers.hpp"
#include "hgx/error.hpp"
#include "hgx/random.hpp"

namespace hgx {
namespace {

void check_template(const Hypergraph& host, const Template& T) {
  if (T.a < 1 || T.b < 1) throw ParameterError("template block sizes must be positive");
  if (T.a + T.b != host.r()) throw ParameterError("template uniformity a+b differs from host r");
  if (!T.A.empty() && T.A.p != T.a) throw ParameterError("A is not a-uniform");
  if (!T.B.empty() && T.B.p != T.b) throw ParameterError("B is not b-uniform");
  if (T.A.vertex_union() & T.B.vertex_union()) throw ParameterError("V(A) and V(B) overlap");
  if (!is_matching(T.B)) throw ParameterError("B is not a matching");
  if ((T.A.vertex_union() | T.B.vertex_union()) & ~full_set(host.n()))
    throw ParameterError("template uses vertices outside the host");
}

}  // namespace

TemplateIncidence incidence(const Hypergraph& host, const Template& T) {
  check_template(host, T);
  std::vector<BipartiteGraph::Edge> pairs;
  std::vector<VertexSet> unions;
  for (std::size_t i = 0; i < T.A.size(); ++i)
    for (std::size_t j = 0; j < T.B.size(); ++j) {
      const VertexSet u = T.A.members[i] | T.B.members[j];
      if (!host.has_edge(u)) continue;
      pairs.push_back({static_cast<int>(i) + 1, static_cast<int>(j) + 1});
      unions.push_back(u);
    }
  return {BipartiteGraph(static_cast<int>(T.A.size()), static_cast<int>(T.B.size()), std::move(pairs)),
          Hypergraph(host.n(), host.r(), std::move(unions))};
}

bool TemplateBoundReport::all_embedded() const {
  return std::all_of(outcomes.begin(), outcomes.end(), [](const TreeOutcome& o) { return o.embedding.has_value(); });
}

std::string TemplateBoundReport::summary() const {
  if (!exceeded) return "bound satisfied";
  const auto ok = std::count_if(outcomes.begin(), outcomes.end(), [](const TreeOutcome& o) { return o.embedding.has_value(); });
  return std::to_string(ok) + "/" + std::to_string(outcomes.size()) + " trees embedded";
}

TemplateBoundReport verify_template_bound(const Hypergraph& host, const Template& T, int s, int t,
                                          const std::vector<BipartiteGraph>& trees) {
  if (!is_matching(T.A)) throw ParameterError("A must be a matching");
  const TemplateIncidence inc = incidence(host, T);
  TemplateBoundReport out;
  out.a_size = T.A.size();
  out.b_size = T.B.size();
  out.h0_size = inc.H0.size();
  out.h1_size = inc.H1.size();
  out.bound = static_cast<std::size_t>(t - 1) * out.a_size + static_cast<std::size_t>(s - 1) * out.b_size;
  out.exceeded = out.h1_size > out.bound;
  if (!out.exceeded) return out;
  for (const auto& tree : trees) {
    if (tree.s() != s || tree.t() != t) throw ParameterError("tree parts differ from (s,t)");
    out.outcomes.push_back({tree, grow_tree_in_bipartite(inc.H0, tree)});
  }
  return out;
}

HeavySets heavy_sets(const Hypergraph& host, int a, double m) {
  if (a < 1 || a >= host.r()) throw ParameterError("heavy_sets needs 1 <= a < r");
  if (m < 1) throw ParameterError("heavy_sets needs m >= 1");
  const double threshold = std::pow(static_cast<double>(host.n()), host.r() - a) / m;
  std::vector<VertexSet> heavy;
  for (const auto& [set, deg] : set_degrees(host, a))
    if (static_cast<double>(deg) >= threshold) heavy.push_back(set);
  HeavySets out{Hypergraph(host.n(), a, std::move(heavy)), 0};
  out.L = *min_vertex_cover(out.D).witness;
  return out;
}

SampledTemplate sample_template(const Hypergraph& host, int a, const SamplerParams& params, VertexSet L) {
  const int n = host.n();
  const int b = host.r() - a;
  if (a < 1 || b < 1) throw ParameterError("sample_template needs 1 <= a < r");
  if (!(params.alpha >= 0 && params.alpha <= 1)) throw ParameterError("alpha must lie in [0,1]");
  if (params.m < 1) throw ParameterError("m must be at least 1");
  Rng rng(params.seed);
  SampledTemplate out;
  for (int v = 1; v <= n; ++v)
    if (!(L & vertex_bit(v)) && rng.coin(params.alpha)) out.R |= vertex_bit(v);

  const int kept = n - n % b;
  std::vector<int> order;
  for (int v = 1; v <= kept; ++v) order.push_back(v);
  for (int v = kept + 1; v <= n; ++v) out.dropped |= vertex_bit(v);
  rng.shuffle(order);
  std::vector<VertexSet> blocks, b0, b1;
  for (int i = 0; i + b <= kept; i += b) {
    VertexSet blk = 0;
    for (int j = 0; j < b; ++j) blk |= vertex_bit(order[i + j]);
    if (blk & out.R) continue;
    blocks.push_back(blk);
    (blk & L ? b1 : b0).push_back(blk);
  }
  std::vector<VertexSet> a_sets;
  for_each_subset(out.R, a, [&](VertexSet s) { a_sets.push_back(s); });
  out.T = Template{EdgeSet(a, std::move(a_sets)), EdgeSet(b, std::move(blocks)), a, b};
  out.B0 = EdgeSet(b, std::move(b0));
  out.B1 = EdgeSet(b, std::move(b1));
  return out;
}

NearCrosscut extract_near_crosscut(const Hypergraph& host, int a, double m) {
  const HeavySets hs = heavy_sets(host, a, m);
  std::vector<VertexSet> f;
  for (VertexSet e : host.edges())
    if (set_size(e & hs.L) == 1) f.push_back(e);
  return {Hypergraph(host.n(), host.r(), std::move(f)), hs.L};
}

TemplateDiagnostics template_diagnostics(int n, int r, int a, int s, const SamplerParams& params) {
  const int b = r - a;
  if (a < 1 || b < 1) throw ParameterError("template_diagnostics needs 1 <= a < r");
  TemplateDiagnostics d;
  const double na1 = std::pow(static_cast<double>(n), a - 1);
  d.beta0 = a * s * params.delta * na1;
  d.beta1 = a * s * na1;
  const double alpha = params.alpha;
  const double denom = static_cast<double>(binomial(n - 1, b - 1));
  d.p0 = static_cast<double>(binomial(r, b)) * std::pow(alpha, a) * std::pow(1 - alpha, b) / denom;
  d.p1 = static_cast<double>(binomial(r - 1, b - 1)) * std::pow(alpha, a) * std::pow(1 - alpha, b - 1) / denom;
  d.m_above_r_to_r = params.m > std::pow(static_cast<double>(r), r);
  d.m_below_sqrt_n = params.m < std::sqrt(static_cast<double>(n));
  d.alpha_below_one_over_r = alpha < 1.0 / r;
  return d;
}

}  // namespace hgx
