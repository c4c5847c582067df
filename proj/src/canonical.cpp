#include "hgx/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "hgx/error.hpp"

namespace hgx {
namespace {

// Ordered partition stored as a colour per vertex; a colour is the index of
// the first position of its cell, so singleton cells keep their position
// under further refinement.
using Colouring = std::vector<int>;

class Canonizer {
 public:
  explicit Canonizer(const Hypergraph& h) : h_(h), n_(h.n()), incident_(n_) {
    for (std::size_t i = 0; i < h.size(); ++i)
      for (int v : to_vertices(h.edges()[i])) incident_[v - 1].push_back(static_cast<int>(i));
  }

  CanonicalLabeling run() {
    Colouring c(n_, 0);
    // Vertex degree is the first invariant; refinement takes it from there.
    refine(c);
    search(c, 0);
    CanonicalLabeling out;
    out.labeling.assign(n_ + 1, 0);
    for (int pos = 0; pos < n_; ++pos) out.labeling[best_lab_[pos] + 1] = pos + 1;
    out.form = serialize(best_code_);
    return out;
  }

 private:
  struct Key {
    int colour;
    std::vector<std::vector<int>> signature;
    bool operator<(const Key& o) const {
      if (colour != o.colour) return colour < o.colour;
      return signature < o.signature;
    }
    bool operator==(const Key& o) const { return colour == o.colour && signature == o.signature; }
  };

  static int cell_count(const Colouring& c) {
    std::vector<int> s(c);
    std::sort(s.begin(), s.end());
    return static_cast<int>(std::unique(s.begin(), s.end()) - s.begin());
  }

  // Re-rank vertices by key, assigning each the number of vertices with a
  // strictly smaller key.
  template <class KeyT>
  static void rerank(Colouring& c, const std::vector<KeyT>& keys) {
    const int n = static_cast<int>(c.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
    for (int i = 0; i < n; ++i) {
      if (i > 0 && keys[order[i]] == keys[order[i - 1]])
        c[order[i]] = c[order[i - 1]];
      else
        c[order[i]] = i;
    }
  }

  void refine(Colouring& c) const {
    int cells = cell_count(c);
    while (true) {
      std::vector<Key> keys(n_);
      for (int v = 0; v < n_; ++v) {
        keys[v].colour = c[v];
        auto& sig = keys[v].signature;
        sig.reserve(incident_[v].size());
        for (int ei : incident_[v]) {
          std::vector<int> others;
          for (int w : to_vertices(h_.edges()[ei]))
            if (w - 1 != v) others.push_back(c[w - 1]);
          std::sort(others.begin(), others.end());
          sig.push_back(std::move(others));
        }
        std::sort(sig.begin(), sig.end());
      }
      rerank(c, keys);
      const int now = cell_count(c);
      if (now == cells) return;
      cells = now;
    }
  }

  std::vector<VertexSet> code_of(const std::vector<int>& pos) const {
    std::vector<VertexSet> code;
    code.reserve(h_.size());
    for (VertexSet e : h_.edges()) {
      VertexSet img = 0;
      for (VertexSet s = e; s; s &= s - 1) img |= VertexSet{1} << pos[first_vertex(s) - 1];
      code.push_back(img);
    }
    std::sort(code.begin(), code.end());
    return code;
  }

  std::string serialize(const std::vector<VertexSet>& code) const {
    std::string out;
    auto put = [&out](std::uint64_t x) {
      for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
    };
    put(static_cast<std::uint64_t>(n_));
    put(static_cast<std::uint64_t>(h_.r()));
    put(code.size());
    for (VertexSet e : code) put(e);
    return out;
  }

  // Orbit representative under the automorphisms that fix every vertex in
  // `fixed` pointwise.
  std::vector<int> orbits_fixing(const std::vector<int>& fixed) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : automorphisms_) {
      bool fixes = std::all_of(fixed.begin(), fixed.end(), [&](int v) { return g[v] == v; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(v), b = find(g[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  // Returns the depth to which the search should unwind: a value below
  // `depth` means an automorphism proved the rest of this subtree redundant.
  int search(const Colouring& c, int depth) {
    int target = -1;
    {
      std::vector<int> cell_size(n_, 0);
      for (int v = 0; v < n_; ++v) ++cell_size[c[v]];
      for (int col = 0; col < n_; ++col)
        if (cell_size[col] > 1) {
          target = col;
          break;
        }
    }
    if (target < 0) return leaf(c);

    std::vector<int> cell;
    for (int v = 0; v < n_; ++v)
      if (c[v] == target) cell.push_back(v);

    std::vector<int> explored;
    for (int v : cell) {
      auto orbit = orbits_fixing(path_);
      bool redundant = std::any_of(explored.begin(), explored.end(), [&](int w) { return orbit[w] == orbit[v]; });
      if (redundant) continue;
      explored.push_back(v);

      Colouring child(c);
      std::vector<std::pair<int, int>> keys(n_);
      for (int w = 0; w < n_; ++w) keys[w] = {c[w], (c[w] == target && w != v) ? 1 : 0};
      rerank(child, keys);
      refine(child);

      path_.push_back(v);
      const int back = search(child, depth + 1);
      path_.pop_back();
      if (back < depth) return back;
    }
    return depth;
  }

  int leaf(const Colouring& c) {
    std::vector<int> lab(n_);
    for (int v = 0; v < n_; ++v) lab[c[v]] = v;
    auto code = code_of(c);
    if (first_lab_.empty()) {
      first_lab_ = best_lab_ = lab;
      first_path_ = best_path_ = path_;
      first_code_ = best_code_ = std::move(code);
      return static_cast<int>(path_.size());
    }
    if (code == first_code_) return record_automorphism(first_lab_, lab, first_path_);
    if (code < best_code_) {
      best_code_ = std::move(code);
      best_lab_ = lab;
      best_path_ = path_;
      return static_cast<int>(path_.size());
    }
    if (code == best_code_) return record_automorphism(best_lab_, lab, best_path_);
    return static_cast<int>(path_.size());
  }

  int record_automorphism(const std::vector<int>& from, const std::vector<int>& to, const std::vector<int>& other_path) {
    std::vector<int> g(n_);
    for (int i = 0; i < n_; ++i) g[from[i]] = to[i];
    automorphisms_.push_back(std::move(g));
    // Depth of the node where the two root-to-leaf paths diverge.
    std::size_t common = 0;
    while (common < path_.size() && common < other_path.size() && path_[common] == other_path[common]) ++common;
    return static_cast<int>(common);
  }

  const Hypergraph& h_;
  int n_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> path_;
  std::vector<std::vector<int>> automorphisms_;
  std::vector<int> first_lab_, best_lab_, first_path_, best_path_;
  std::vector<VertexSet> first_code_, best_code_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Hypergraph& h) {
  if (h.n() > kCanonicalMaxVertices)
    throw UnsupportedSize("canonical_form supports at most " + std::to_string(kCanonicalMaxVertices) + " vertices, got " +
                          std::to_string(h.n()));
  return Canonizer(h).run();
}

std::string canonical_form(const Hypergraph& h) { return canonical_labeling(h).form; }

Hypergraph compacted(const Hypergraph& h) {
  const VertexSet sup = h.support();
  std::vector<int> perm(h.n() + 1, 0);
  int next = 0;
  for (int v = 1; v <= h.n(); ++v)
    if (sup & vertex_bit(v)) perm[v] = ++next;
  return h.relabeled(perm, std::max(next, h.r()));
}

bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.r() != b.r() || a.size() != b.size()) return false;
  return canonical_form(compacted(a)) == canonical_form(compacted(b));
}

}  // namespace hgx
