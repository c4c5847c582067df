#include "hgx/constructions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hgx/error.hpp"
#include "hgx/random.hpp"

namespace hgx {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

VertexSet interval(int from, int count) { return count == 0 ? 0 : (full_set(count) << (from - 1)); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

int to_int(const std::string& s, const std::string& spec) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParameterError("bad number '" + s + "' in pattern " + spec);
  }
}

}  // namespace

Hypergraph psi(int n, int r, int c) {
  require(r >= 1 && r <= n, "psi needs 1 <= r <= n");
  require(c >= 0 && c <= n, "psi needs 0 <= c <= n");
  const VertexSet core = full_set(c);
  std::vector<VertexSet> edges;
  for_each_subset(full_set(n), r, [&](VertexSet e) {
    if (e & core) edges.push_back(e);
  });
  return Hypergraph(n, r, std::move(edges));
}

Hypergraph psi1(int n, int r, int c) {
  require(r >= 1 && r <= n, "psi1 needs 1 <= r <= n");
  require(c >= 0 && c <= n, "psi1 needs 0 <= c <= n");
  require(r <= n - c + 1, "psi1 needs r <= n - c + 1");
  const VertexSet core = full_set(c);
  std::vector<VertexSet> edges;
  for_each_subset(full_set(n), r, [&](VertexSet e) {
    if (set_size(e & core) == 1) edges.push_back(e);
  });
  return Hypergraph(n, r, std::move(edges));
}

Blowup blowup(const BipartiteGraph& skeleton, int a, int b) {
  require(a >= 1 && b >= 1, "blowup needs a, b >= 1");
  const int s = skeleton.s(), t = skeleton.t();
  const int n = std::max(a * s + b * t, a + b);
  if (n > kMaxVertices) throw UnsupportedSize("blowup needs more than 64 vertices");
  Blowup out{Hypergraph(n, a + b), skeleton, a, b, {}, {}};
  for (int i = 1; i <= s; ++i) out.u_blocks.push_back(interval((i - 1) * a + 1, a));
  for (int j = 1; j <= t; ++j) out.v_blocks.push_back(interval(a * s + (j - 1) * b + 1, b));
  std::vector<VertexSet> edges;
  for (auto [u, v] : skeleton.edges()) edges.push_back(out.u_blocks[u - 1] | out.v_blocks[v - 1]);
  out.graph = Hypergraph(n, a + b, std::move(edges));
  return out;
}

Hypergraph ab_path(int ell, int a, int b) {
  require(ell >= 1, "path length must be positive");
  require(a >= 1 && b >= 1, "block sizes must be positive");
  std::vector<VertexSet> blocks;
  int next = 1;
  for (int i = 0; i <= ell; ++i) {
    const int size = i % 2 == 0 ? a : b;
    blocks.push_back(interval(next, size));
    next += size;
  }
  const int n = next - 1;
  if (n > kMaxVertices) throw UnsupportedSize("path needs more than 64 vertices");
  std::vector<VertexSet> edges;
  for (int i = 0; i < ell; ++i) edges.push_back(blocks[i] | blocks[i + 1]);
  return Hypergraph(n, a + b, std::move(edges));
}

Hypergraph tight_path(int ell, int r) {
  require(ell >= 1 && r >= 1, "tight path needs ell, r >= 1");
  std::vector<VertexSet> edges;
  for (int i = 1; i <= ell; ++i) edges.push_back(interval(i, r));
  return Hypergraph(ell + r - 1, r, std::move(edges));
}

Hypergraph loose_path(int ell, int r) {
  require(ell >= 1 && r >= 2, "loose path needs ell >= 1, r >= 2");
  std::vector<VertexSet> edges;
  for (int i = 1; i <= ell; ++i) edges.push_back(interval((i - 1) * (r - 1) + 1, r));
  return Hypergraph(ell * (r - 1) + 1, r, std::move(edges));
}

Hypergraph c4_blowup(int a, int b) { return blowup(BipartiteGraph::cycle(4), a, b).graph; }

Hypergraph fano_plane() {
  return Hypergraph::from_lists(7, 3, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}});
}

std::vector<BipartiteGraph> trees_with_parts(int s, int t) {
  require(s >= 0 && t >= 0 && s + t >= 1, "tree part sizes must be non-negative with s + t >= 1");
  if (s + t > kTreeEnumerationLimit)
    throw UnsupportedSize("trees_with_parts supports s + t <= " + std::to_string(kTreeEnumerationLimit));
  if (s == 0 || t == 0) {
    if (s + t == 1) return {BipartiteGraph(s, t)};
    return {};
  }
  // Grow from a single edge by attaching leaves, deduplicating each level by
  // the part-preserving tree code.
  std::map<std::string, BipartiteGraph> level;
  BipartiteGraph seed(1, 1, {{1, 1}});
  level.emplace(tree_code(seed), seed);
  for (int size = 2; size < s + t; ++size) {
    std::map<std::string, BipartiteGraph> next;
    for (const auto& [code, tree] : level) {
      auto edges = tree.edges();
      if (tree.s() < s) {
        for (int v = 1; v <= tree.t(); ++v) {
          auto e = edges;
          e.emplace_back(tree.s() + 1, v);
          BipartiteGraph grown(tree.s() + 1, tree.t(), std::move(e));
          next.emplace(tree_code(grown), std::move(grown));
        }
      }
      if (tree.t() < t) {
        for (int u = 1; u <= tree.s(); ++u) {
          auto e = edges;
          e.emplace_back(u, tree.t() + 1);
          BipartiteGraph grown(tree.s(), tree.t() + 1, std::move(e));
          next.emplace(tree_code(grown), std::move(grown));
        }
      }
    }
    level = std::move(next);
  }
  std::vector<BipartiteGraph> out;
  for (auto& [code, tree] : level)
    if (tree.s() == s && tree.t() == t) out.push_back(tree);
  return out;
}

Hypergraph no_stability_example(int n, int r, std::optional<std::uint64_t> seed) {
  require(r >= 2 && n >= r + 2, "no_stability_example needs r >= 2 and n >= r + 2");
  const VertexSet rest = full_set(n) & ~full_set(2);
  std::optional<Rng> rng;
  if (seed) rng.emplace(*seed);
  std::vector<VertexSet> edges;
  for_each_subset(rest, r - 1, [&](VertexSet e) {
    bool first;
    if (rng) {
      first = rng->coin(0.5);
    } else {
      int sum = 0;
      for (int v : to_vertices(e)) sum += v;
      first = sum % 2 == 0;
    }
    edges.push_back(e | vertex_bit(first ? 1 : 2));
  });
  return Hypergraph(n, r, std::move(edges));
}

NamedPattern builtin_pattern(const std::string& spec) {
  auto parts = split(spec, ':');
  const std::string& kind = parts[0];
  auto arity = [&](std::size_t k) {
    if (parts.size() != k) throw ParameterError("pattern '" + spec + "' needs " + std::to_string(k - 1) + " fields");
  };
  if (kind == "path") {
    arity(4);
    auto bl = blowup(BipartiteGraph::path(to_int(parts[1], spec)), to_int(parts[2], spec), to_int(parts[3], spec));
    return {bl.graph, bl};
  }
  if (kind == "tightpath") {
    arity(3);
    return {tight_path(to_int(parts[1], spec), to_int(parts[2], spec)), std::nullopt};
  }
  if (kind == "loosepath") {
    arity(3);
    return {loose_path(to_int(parts[1], spec), to_int(parts[2], spec)), std::nullopt};
  }
  if (kind == "c4") {
    arity(3);
    auto bl = blowup(BipartiteGraph::cycle(4), to_int(parts[1], spec), to_int(parts[2], spec));
    return {bl.graph, bl};
  }
  if (kind == "tree") {
    arity(4);
    std::vector<int> seq;
    if (!parts[1].empty())
      for (const auto& x : split(parts[1], ',')) seq.push_back(to_int(x, spec));
    auto bl = blowup(BipartiteGraph::from_pruefer(seq), to_int(parts[2], spec), to_int(parts[3], spec));
    return {bl.graph, bl};
  }
  throw ParameterError("unknown pattern '" + spec + "'");
}

}  // namespace hgx
