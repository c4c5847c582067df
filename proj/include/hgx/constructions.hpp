#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgx/bipartite.hpp"
#include "hgx/hypergraph.hpp"

namespace hgx {

/// All r-sets of [n] meeting [c].
Hypergraph psi(int n, int r, int c);

/// All r-sets of [n] meeting [c] in exactly one vertex (the crosscut construction).
Hypergraph psi1(int n, int r, int c);

/// An (a,b)-blowup together with the blocks each skeleton vertex became.
struct Blowup {
  Hypergraph graph;
  BipartiteGraph skeleton;
  int a;
  int b;
  std::vector<VertexSet> u_blocks;  // u_blocks[i-1] is the a-set of u_i
  std::vector<VertexSet> v_blocks;  // v_blocks[j-1] is the b-set of v_j
};

/// Replace u_i by an a-set and v_j by a b-set, U-blocks on labels 1..as and
/// V-blocks on as+1..as+bt, each in index order.
Blowup blowup(const BipartiteGraph& skeleton, int a, int b);

/// P_ell(a,b) built directly from its interval description: blocks of sizes
/// a, b, a, b, ... laid out on a line, edges are unions of consecutive blocks.
Hypergraph ab_path(int ell, int a, int b);

/// Edges {i, ..., i+r-1} for i = 1..ell.
Hypergraph tight_path(int ell, int r);

/// Graph path with every edge padded by r-2 fresh vertices.
Hypergraph loose_path(int ell, int r);

/// The C4(a,b) blowup of a 4-cycle.
Hypergraph c4_blowup(int a, int b);

/// The Fano plane, STS(7).
Hypergraph fano_plane();

/// All trees with parts of sizes s and t, one per isomorphism class that
/// keeps U and V apart. Sorted by tree_code. Requires s + t <= 10.
std::vector<BipartiteGraph> trees_with_parts(int s, int t);
inline constexpr int kTreeEnumerationLimit = 10;

/// Split the complete (r-1)-graph on {3..n} into G1 and G2 and add vertex i
/// to every member of G_i. Without a seed a set goes to G1 iff its vertex sum
/// is even; with a seed each set flips a fair coin.
Hypergraph no_stability_example(int n, int r, std::optional<std::uint64_t> seed = std::nullopt);

/// A named pattern: path:L:a:b, tightpath:L:r, loosepath:L:r, c4:a:b,
/// tree:<pruefer>:a:b (pruefer entries comma separated, may be empty).
struct NamedPattern {
  Hypergraph graph;
  std::optional<Blowup> blowup;  // set for blowup-shaped patterns
};
NamedPattern builtin_pattern(const std::string& spec);

}  // namespace hgx
