#pragma once

#include <optional>
#include <vector>

#include "hgx/bipartite.hpp"
#include "hgx/hypergraph.hpp"

namespace hgx {

/// Outcome of an exact cover or crosscut computation. `witness` is empty only
/// when no crosscut exists; vertex covers always exist.
struct CoverResult {
  std::optional<VertexSet> witness;

  bool exists() const { return witness.has_value(); }
  std::optional<int> size() const {
    if (!witness) return std::nullopt;
    return set_size(*witness);
  }
};

/// tau(H) with the lexicographically smallest minimum cover as witness.
CoverResult min_vertex_cover(const Hypergraph& h);

/// sigma(H): a smallest X with |e & X| == 1 for every edge, lexicographically
/// smallest among those; no witness when H has no crosscut.
CoverResult min_crosscut(const Hypergraph& h);

bool is_vertex_cover(const Hypergraph& h, VertexSet x);
bool is_crosscut(const Hypergraph& h, VertexSet x);

/// V-part leaves x of a tree skeleton whose removal lowers the crosscut
/// number of the (a,b)-blowup. Throws ParameterError if the skeleton is not
/// a tree.
std::vector<int> critical_leaves(const BipartiteGraph& tree, int a, int b);

}  // namespace hgx
