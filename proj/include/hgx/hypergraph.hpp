#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hgx {

/// A set of vertices packed into a machine word; vertex v (1-based) is bit v-1.
using VertexSet = std::uint64_t;

/// Largest vertex label representable in a VertexSet.
inline constexpr int kMaxVertices = 64;

constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << (v - 1); }

constexpr int set_size(VertexSet s) { return std::popcount(s); }

/// Smallest vertex of a nonempty set.
constexpr int first_vertex(VertexSet s) { return std::countr_zero(s) + 1; }

constexpr VertexSet full_set(int n) {
  return n >= kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

VertexSet make_set(std::span<const int> vertices);
VertexSet make_set(std::initializer_list<int> vertices);
std::vector<int> to_vertices(VertexSet s);
std::string set_to_string(VertexSet s);

/// Exact binomial coefficient; zero when k < 0 or k > n.
std::uint64_t binomial(int n, int k);

/// Visit every k-subset of `ground` in increasing numeric order, which is
/// colex order on the underlying vertex labels.
template <class Fn>
void for_each_subset(VertexSet ground, int k, Fn&& fn) {
  const int m = set_size(ground);
  if (k < 0 || k > m) return;
  if (k == 0) {
    fn(VertexSet{0});
    return;
  }
  if (k == m) {
    fn(ground);
    return;
  }
  int pos[kMaxVertices];
  int idx = 0;
  for (VertexSet g = ground; g; g &= g - 1) pos[idx++] = std::countr_zero(g);
  // Gosper's hack over compressed indices, expanded through pos[].
  std::uint64_t comb = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = m >= 64 ? 0 : (std::uint64_t{1} << m);
  while (true) {
    VertexSet s = 0;
    for (std::uint64_t c = comb; c; c &= c - 1) s |= VertexSet{1} << pos[std::countr_zero(c)];
    fn(s);
    const std::uint64_t low = comb & -comb;
    const std::uint64_t ripple = comb + low;
    if (ripple == 0 || (limit != 0 && ripple >= limit)) break;
    comb = (((ripple ^ comb) >> 2) / low) | ripple;
    if (limit != 0 && comb >= limit) break;
  }
}

/// All k-subsets of [n] in colex order.
std::vector<VertexSet> all_subsets(int n, int k);

/// A family of p-element vertex sets (shadows, neighborhoods, template parts).
struct EdgeSet {
  int p = 0;
  std::vector<VertexSet> members;  // sorted ascending, distinct

  EdgeSet() = default;
  EdgeSet(int p, std::vector<VertexSet> members);

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  bool contains(VertexSet s) const;
  VertexSet vertex_union() const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
};

/// An r-uniform hypergraph on vertex set [n]. Immutable after construction;
/// edges are kept sorted in colex order with duplicates removed.
class Hypergraph {
 public:
  Hypergraph(int n, int r);
  Hypergraph(int n, int r, std::vector<VertexSet> edges);

  static Hypergraph from_lists(int n, int r, const std::vector<std::vector<int>>& edges);

  int n() const { return n_; }
  int r() const { return r_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  std::span<const VertexSet> edges() const { return edges_; }

  bool has_edge(VertexSet e) const;
  int degree(int v) const;
  /// Union of all edges.
  VertexSet support() const;

  /// Image under a vertex map; perm[v] is the new label of v (perm[0] unused).
  Hypergraph relabeled(std::span<const int> perm, int new_n) const;
  Hypergraph relabeled(std::span<const int> perm) const { return relabeled(perm, n_); }

  /// Same edges, viewed on a larger (or smaller, if it still fits) vertex set.
  Hypergraph with_vertex_count(int n) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_;
  int r_;
  std::vector<VertexSet> edges_;
};

/// p-sets contained in at least one edge.
EdgeSet shadow(const Hypergraph& h, int p);

/// Gamma_H(e) = { f \ e : e subset of f in H }.
EdgeSet neighborhood(const Hypergraph& h, VertexSet e);

/// |Gamma_H(e)|.
std::size_t degree(const Hypergraph& h, VertexSet e);

bool is_matching(const EdgeSet& f);
bool is_matching(std::span<const VertexSet> family);

/// Degree of every p-subset that lies in some edge, keyed by subset.
std::vector<std::pair<VertexSet, std::size_t>> set_degrees(const Hypergraph& h, int p);

}  // namespace hgx
