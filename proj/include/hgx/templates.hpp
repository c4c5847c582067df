#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgx/bipartite.hpp"
#include "hgx/embedding.hpp"
#include "hgx/hypergraph.hpp"

namespace hgx {

/// An (a,b)-template: an a-uniform family A and a b-uniform matching B on
/// disjoint vertex sets.
struct Template {
  EdgeSet A;
  EdgeSet B;
  int a = 1;
  int b = 1;
};

/// H0 has u_i for the i-th member of A (ascending) and v_j for the j-th
/// member of B; H1 is the set of unions e|f that are host edges.
struct TemplateIncidence {
  BipartiteGraph H0;
  Hypergraph H1;
};

TemplateIncidence incidence(const Hypergraph& host, const Template& T);

struct TreeOutcome {
  BipartiteGraph tree;
  std::optional<TreeEmbedding> embedding;
};

struct TemplateBoundReport {
  std::size_t a_size = 0;
  std::size_t b_size = 0;
  std::size_t h0_size = 0;
  std::size_t h1_size = 0;
  std::size_t bound = 0;   // (t-1)|A| + (s-1)|B|
  bool exceeded = false;   // |H1| > bound, trees were searched
  std::vector<TreeOutcome> outcomes;

  bool all_embedded() const;
  std::string summary() const;  // "bound satisfied" or "k/N trees embedded"
};

/// When |H1| > (t-1)|A| + (s-1)|B|, try to embed each tree (parts s and t)
/// into H0; otherwise report the bound as satisfied. A and B must be
/// matchings.
TemplateBoundReport verify_template_bound(const Hypergraph& host, const Template& T, int s, int t,
                                          const std::vector<BipartiteGraph>& trees);

struct HeavySets {
  Hypergraph D;  // a-uniform, on the host's vertex set
  VertexSet L = 0;
};

/// a-sets of degree at least n^b / m (b = r - a), and a minimum vertex cover
/// of them.
HeavySets heavy_sets(const Hypergraph& host, int a, double m);

struct SamplerParams {
  double alpha = 0.5;
  double m = 1;
  std::uint64_t seed = 0;
  double delta = 1;
};

struct SampledTemplate {
  Template T;
  VertexSet R = 0;
  EdgeSet B0;  // blocks missing L
  EdgeSet B1;  // blocks meeting L
  VertexSet dropped = 0;  // the n mod b highest labels, left out of the partition
};

/// R: vertices outside L kept independently with probability alpha, in label
/// order. The rest of the vertices (after dropping n mod b of the highest
/// labels) are shuffled and cut into consecutive b-blocks; B keeps the blocks
/// missing R, and A = all a-subsets of R.
SampledTemplate sample_template(const Hypergraph& host, int a, const SamplerParams& params, VertexSet L);

struct NearCrosscut {
  Hypergraph F;
  VertexSet L = 0;
};

/// Edges meeting the heavy-set cover in exactly one vertex.
NearCrosscut extract_near_crosscut(const Hypergraph& host, int a, double m);

/// Finite-n values of the sampling bookkeeping and the guards on m.
struct TemplateDiagnostics {
  double beta0 = 0;
  double beta1 = 0;
  double p0 = 0;
  double p1 = 0;
  bool m_above_r_to_r = false;    // m > r^r
  bool m_below_sqrt_n = false;    // m < sqrt(n)
  bool alpha_below_one_over_r = false;
};

TemplateDiagnostics template_diagnostics(int n, int r, int a, int s, const SamplerParams& params);

}  // namespace hgx
