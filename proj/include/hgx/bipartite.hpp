#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hgx {

/// A bipartite graph with parts U = {1..s} and V = {1..t}. Edges are (u, v)
/// pairs, sorted and distinct. Used as the skeleton of blowups and as the
/// incidence graph H0 of a template.
class BipartiteGraph {
 public:
  using Edge = std::pair<int, int>;

  BipartiteGraph(int s, int t, std::vector<Edge> edges = {});

  int s() const { return s_; }
  int t() const { return t_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int u, int v) const;
  int degree_u(int u) const;
  int degree_v(int v) const;
  std::vector<int> neighbors_u(int u) const;
  std::vector<int> neighbors_v(int v) const;

  /// Every vertex of both parts reachable from every other. A graph with a
  /// single vertex counts as connected.
  bool is_connected() const;
  bool is_tree() const { return is_connected() && static_cast<int>(edges_.size()) == s_ + t_ - 1; }

  /// Delete a vertex; later vertices of the same part shift down by one.
  BipartiteGraph without_u(int u) const;
  BipartiteGraph without_v(int v) const;

  /// Exchange the roles of U and V.
  BipartiteGraph swapped() const;

  /// Graph path with `length` edges u1 v1 u2 v2 ..., starting in U.
  static BipartiteGraph path(int length);
  /// Cycle of even length 2k alternating between U and V.
  static BipartiteGraph cycle(int length);
  /// Star with centre u1 and `leaves` leaves in V.
  static BipartiteGraph star(int leaves);
  /// Double star: adjacent centres u1, v1 with the given number of extra leaves.
  static BipartiteGraph double_star(int u_center_leaves, int v_center_leaves);
  /// Decode a Pruefer sequence over [len+2]; the colour class containing
  /// vertex 1 becomes U. Vertices keep their relative order within each part.
  static BipartiteGraph from_pruefer(const std::vector<int>& sequence);

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  int s_;
  int t_;
  std::vector<Edge> edges_;
};

/// Canonical code of a tree that respects which part is U: two trees get the
/// same code iff some isomorphism maps U onto U and V onto V.
std::string tree_code(const BipartiteGraph& tree);

std::string to_text(const BipartiteGraph& g);

}  // namespace hgx
