#pragma once

#include <string>
#include <vector>

#include "hgx/hypergraph.hpp"

namespace hgx {

/// Largest vertex count accepted by canonical_form.
inline constexpr int kCanonicalMaxVertices = 32;

struct CanonicalLabeling {
  std::string form;          // canonical byte string
  std::vector<int> labeling; // labeling[v] = canonical label of v (1-based, index 0 unused)
};

/// Exact canonical labeling by colour refinement plus individualization,
/// with automorphism pruning. Two hypergraphs get equal forms iff they are
/// isomorphic (same n, same r). Throws UnsupportedSize above
/// kCanonicalMaxVertices.
CanonicalLabeling canonical_labeling(const Hypergraph& h);

std::string canonical_form(const Hypergraph& h);

/// Isomorphism of edge families, ignoring isolated vertices.
bool isomorphic(const Hypergraph& a, const Hypergraph& b);

/// Restrict to the vertices that lie in some edge, relabeled 1..k in order.
Hypergraph compacted(const Hypergraph& h);

}  // namespace hgx
