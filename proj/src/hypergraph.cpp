#include "hgx/hypergraph.hpp"

#include <algorithm>
#include <unordered_map>

#include "hgx/error.hpp"

namespace hgx {

VertexSet make_set(std::span<const int> vertices) {
  VertexSet s = 0;
  for (int v : vertices) {
    if (v < 1 || v > kMaxVertices) throw ParameterError("vertex label out of range: " + std::to_string(v));
    s |= vertex_bit(v);
  }
  return s;
}

VertexSet make_set(std::initializer_list<int> vertices) {
  return make_set(std::span<const int>(vertices.begin(), vertices.size()));
}

std::vector<int> to_vertices(VertexSet s) {
  std::vector<int> out;
  out.reserve(set_size(s));
  for (; s; s &= s - 1) out.push_back(first_vertex(s));
  return out;
}

std::string set_to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : to_vertices(s)) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (int i = 1; i <= k; ++i) acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(acc);
}

std::vector<VertexSet> all_subsets(int n, int k) {
  std::vector<VertexSet> out;
  out.reserve(binomial(n, k));
  for_each_subset(full_set(n), k, [&](VertexSet s) { out.push_back(s); });
  return out;
}

namespace {

void normalize(std::vector<VertexSet>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

EdgeSet::EdgeSet(int p, std::vector<VertexSet> m) : p(p), members(std::move(m)) {
  normalize(members);
  for (VertexSet s : members)
    if (set_size(s) != p) throw ParameterError("edge set member " + set_to_string(s) + " is not a " + std::to_string(p) + "-set");
}

bool EdgeSet::contains(VertexSet s) const { return std::binary_search(members.begin(), members.end(), s); }

VertexSet EdgeSet::vertex_union() const {
  VertexSet u = 0;
  for (VertexSet s : members) u |= s;
  return u;
}

Hypergraph::Hypergraph(int n, int r) : Hypergraph(n, r, {}) {}

Hypergraph::Hypergraph(int n, int r, std::vector<VertexSet> edges) : n_(n), r_(r), edges_(std::move(edges)) {
  if (r < 1) throw ParameterError("uniformity must be at least 1");
  if (n < r) throw ParameterError("vertex count " + std::to_string(n) + " is below uniformity " + std::to_string(r));
  if (n > kMaxVertices) throw UnsupportedSize("at most 64 vertices are supported");
  const VertexSet all = full_set(n);
  for (VertexSet e : edges_) {
    if (set_size(e) != r) throw ParameterError("edge " + set_to_string(e) + " does not have " + std::to_string(r) + " vertices");
    if (!is_subset(e, all)) throw ParameterError("edge " + set_to_string(e) + " leaves [" + std::to_string(n) + "]");
  }
  normalize(edges_);
}

Hypergraph Hypergraph::from_lists(int n, int r, const std::vector<std::vector<int>>& edges) {
  std::vector<VertexSet> masks;
  masks.reserve(edges.size());
  for (const auto& e : edges) {
    VertexSet s = make_set(e);
    if (set_size(s) != static_cast<int>(e.size())) throw ParameterError("edge with repeated vertex");
    masks.push_back(s);
  }
  return Hypergraph(n, r, std::move(masks));
}

bool Hypergraph::has_edge(VertexSet e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

int Hypergraph::degree(int v) const {
  const VertexSet b = vertex_bit(v);
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [b](VertexSet e) { return (e & b) != 0; }));
}

VertexSet Hypergraph::support() const {
  VertexSet u = 0;
  for (VertexSet e : edges_) u |= e;
  return u;
}

Hypergraph Hypergraph::relabeled(std::span<const int> perm, int new_n) const {
  std::vector<VertexSet> out;
  out.reserve(edges_.size());
  for (VertexSet e : edges_) {
    VertexSet img = 0;
    for (VertexSet s = e; s; s &= s - 1) img |= vertex_bit(perm[first_vertex(s)]);
    if (set_size(img) != r_) throw ParameterError("relabeling is not injective on an edge");
    out.push_back(img);
  }
  return Hypergraph(new_n, r_, std::move(out));
}

Hypergraph Hypergraph::with_vertex_count(int n) const {
  return Hypergraph(n, r_, edges_);
}

EdgeSet shadow(const Hypergraph& h, int p) {
  if (p < 1 || p > h.r()) throw ParameterError("shadow size must lie in [1, r]");
  std::vector<VertexSet> out;
  if (p == h.r()) return EdgeSet(p, {h.edges().begin(), h.edges().end()});
  out.reserve(h.size() * binomial(h.r(), p));
  for (VertexSet e : h.edges()) for_each_subset(e, p, [&](VertexSet s) { out.push_back(s); });
  return EdgeSet(p, std::move(out));
}

EdgeSet neighborhood(const Hypergraph& h, VertexSet e) {
  if (e == 0) throw ParameterError("neighborhood of the empty set is not defined");
  if (set_size(e) >= h.r()) throw ParameterError("neighborhood needs |e| < r");
  if (!is_subset(e, full_set(h.n()))) throw ParameterError("set " + set_to_string(e) + " leaves the vertex set");
  std::vector<VertexSet> out;
  for (VertexSet f : h.edges())
    if (is_subset(e, f)) out.push_back(f & ~e);
  return EdgeSet(h.r() - set_size(e), std::move(out));
}

std::size_t degree(const Hypergraph& h, VertexSet e) { return neighborhood(h, e).size(); }

bool is_matching(std::span<const VertexSet> family) {
  VertexSet seen = 0;
  for (VertexSet s : family) {
    if (seen & s) return false;
    seen |= s;
  }
  return true;
}

bool is_matching(const EdgeSet& f) { return is_matching(std::span<const VertexSet>(f.members)); }

std::vector<std::pair<VertexSet, std::size_t>> set_degrees(const Hypergraph& h, int p) {
  std::unordered_map<VertexSet, std::size_t> count;
  for (VertexSet e : h.edges()) for_each_subset(e, p, [&](VertexSet s) { ++count[s]; });
  std::vector<std::pair<VertexSet, std::size_t>> out(count.begin(), count.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hgx
