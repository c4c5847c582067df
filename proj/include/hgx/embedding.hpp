#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "hgx/bipartite.hpp"
#include "hgx/hypergraph.hpp"

namespace hgx {

/// Blowup-structured part of an embedding: the host block each skeleton
/// vertex landed on.
struct BlockMap {
  std::vector<VertexSet> u_blocks;
  std::vector<VertexSet> v_blocks;
};

/// Injective map from pattern vertices to host vertices. vertex_map[x] is the
/// image of pattern vertex x, or 0 when x lies in no pattern edge.
struct Embedding {
  std::vector<int> vertex_map;
  std::optional<BlockMap> blocks;
};

enum class SearchStatus { kFound, kAbsent, kBudgetExhausted };

const char* to_string(SearchStatus s);

struct ContainResult {
  SearchStatus status = SearchStatus::kAbsent;
  std::optional<Embedding> embedding;
  std::uint64_t nodes = 0;

  bool found() const { return status == SearchStatus::kFound; }
};

/// Node budget for containment searches; 0 means unlimited.
struct SearchLimits {
  std::uint64_t node_budget = 0;
};

/// Edge index supporting insertion and LIFO removal, used as the host side of
/// every matcher.
class HostIndex {
 public:
  HostIndex(int n, int r);
  explicit HostIndex(const Hypergraph& h);

  int n() const { return n_; }
  int r() const { return r_; }
  std::size_t size() const { return count_; }

  bool has(VertexSet e) const;
  void add(VertexSet e);
  void remove(VertexSet e);

  int degree(int v) const { return static_cast<int>(incident_[v - 1].size()); }
  const std::vector<VertexSet>& incident(int v) const { return incident_[v - 1]; }

 private:
  std::size_t rank(VertexSet e) const;

  int n_;
  int r_;
  std::size_t count_ = 0;
  bool dense_;
  std::vector<char> present_;
  std::unordered_set<VertexSet> sparse_;
  std::vector<std::vector<VertexSet>> incident_;
};

/// Backtracking copy finder for one pattern. Pattern vertices are visited in
/// BFS order from a maximum-degree vertex; host candidates are filtered by
/// degree and by the partial images of every pattern edge through the vertex,
/// then tried by decreasing host degree, ties by label.
class PatternMatcher {
 public:
  explicit PatternMatcher(const Hypergraph& pattern);
  /// Variant whose first r positions are the vertices of `anchor`, a pattern
  /// edge; used to look only for copies through a given host edge.
  PatternMatcher(const Hypergraph& pattern, VertexSet anchor);

  /// Search for a copy; when host_anchor is nonzero the anchor pattern edge
  /// must map onto it. Adds visited nodes to `nodes`.
  SearchStatus find(const HostIndex& host, VertexSet host_anchor, std::uint64_t budget, std::uint64_t& nodes,
                    std::vector<int>* mapping) const;

  const Hypergraph& pattern() const { return pattern_; }

 private:
  struct Step {
    int vertex;
    int degree;
    std::vector<VertexSet> completed;  // pattern edges whose last vertex is this one
    std::vector<VertexSet> partial;    // earlier part of each pattern edge through this vertex
  };

  void plan(std::vector<int> order);
  bool extend(std::size_t pos, const HostIndex& host, VertexSet host_anchor, VertexSet used, std::vector<int>& map,
              std::uint64_t budget, std::uint64_t& nodes, bool& exhausted) const;

  Hypergraph pattern_;
  std::vector<Step> steps_;
  std::size_t anchored_ = 0;
};

/// Some injective map sending every pattern edge to a host edge.
ContainResult contains(const Hypergraph& host, const Hypergraph& pattern, SearchLimits limits = {});

/// Direct search for disjoint a-blocks and b-blocks realising the
/// (a,b)-blowup of `skeleton`. Skeleton vertices without edges are ignored.
ContainResult contains_blowup(const Hypergraph& host, const BipartiteGraph& skeleton, int a, int b,
                              SearchLimits limits = {});

bool validate_embedding(const Hypergraph& host, const Hypergraph& pattern, const Embedding& emb);
bool validate_block_embedding(const Hypergraph& host, const BipartiteGraph& skeleton, int a, int b,
                              const Embedding& emb);

struct TightTreeResult {
  bool is_tight_tree = false;
  std::vector<VertexSet> order;  // certificate edge order when is_tight_tree
};

/// Exact decision whether the edges admit an order in which each new edge
/// meets the union of earlier edges in r-1 vertices lying inside one earlier
/// edge.
TightTreeResult is_tight_tree(const Hypergraph& h);

/// Repeatedly delete (r-1)-sets of degree at most ell-1 together with their
/// edges. Each round removes one shadow set and at most ell-1 edges, so the
/// result is nonempty whenever |G| > (ell-1)|shadow(G)|.
Hypergraph prune_low_codegree(const Hypergraph& g, int ell);

/// Embed a tight tree by the greedy extension over the pruned host: map the
/// first edge anywhere, then give each next edge a fresh vertex completing
/// its (r-1)-set. Returns nothing when the pruned host is empty.
std::optional<Embedding> greedy_tight_tree(const Hypergraph& g, const Hypergraph& tree);

/// Embedding of a tree skeleton into an incidence graph: u_to_a[i-1] is the
/// A-side vertex used for u_i, v_to_b[j-1] the B-side vertex for v_j.
struct TreeEmbedding {
  std::vector<int> u_to_a;
  std::vector<int> v_to_b;
};

/// Leaf-by-leaf extension after pruning A-side vertices of degree < t and
/// B-side vertices of degree < s. Returns nothing when the pruned core is
/// empty.
std::optional<TreeEmbedding> grow_tree_in_bipartite(const BipartiteGraph& h0, const BipartiteGraph& tree);

/// Surviving A-side and B-side vertices after iterated minimum-degree pruning.
struct BipartiteCore {
  std::vector<char> a_alive;
  std::vector<char> b_alive;
  bool empty() const;
};
BipartiteCore min_degree_core(const BipartiteGraph& h0, int a_min_degree, int b_min_degree);

}  // namespace hgx
