#include "hgx/covers.hpp"

#include <span>

#include "hgx/constructions.hpp"
#include "hgx/error.hpp"

namespace hgx {
namespace {

// Pairwise-disjoint edges among those selected, picked greedily in order;
// any cover needs at least this many vertices from `allowed`.
int disjoint_lower_bound(std::span<const VertexSet> edges, VertexSet hit, VertexSet allowed) {
  VertexSet used = 0;
  int count = 0;
  for (VertexSet e : edges) {
    if (e & hit) continue;
    VertexSet free = e & allowed;
    if (free & used) continue;
    used |= free;
    ++count;
  }
  return count;
}

// Is there a vertex cover of size <= budget that contains `chosen` and
// otherwise uses vertices of `allowed` only?
bool cover_within(std::span<const VertexSet> edges, VertexSet chosen, VertexSet allowed, int budget) {
  const VertexSet* open = nullptr;
  for (const VertexSet& e : edges)
    if (!(e & chosen)) {
      open = &e;
      break;
    }
  if (!open) return true;
  if (budget == 0) return false;
  if (disjoint_lower_bound(edges, chosen, allowed) > budget) return false;
  for (VertexSet c = *open & allowed; c; c &= c - 1) {
    const VertexSet v = c & -c;
    if (cover_within(edges, chosen | v, allowed, budget - 1)) return true;
  }
  return false;
}

// Crosscut search. `chosen` must meet each edge at most once; `forbidden`
// holds vertices sharing an edge with a chosen vertex.
bool crosscut_within(std::span<const VertexSet> edges, VertexSet chosen, VertexSet forbidden, VertexSet allowed,
                     int budget) {
  const VertexSet* open = nullptr;
  for (const VertexSet& e : edges)
    if (!(e & chosen)) {
      if (!(e & allowed & ~forbidden)) return false;
      if (!open) open = &e;
    }
  if (!open) return true;
  if (budget == 0) return false;
  if (disjoint_lower_bound(edges, chosen, allowed & ~forbidden) > budget) return false;
  for (VertexSet c = *open & allowed & ~forbidden; c; c &= c - 1) {
    const VertexSet v = c & -c;
    VertexSet blocked = forbidden;
    for (VertexSet e : edges)
      if (e & v) blocked |= e;
    blocked &= ~v;
    if (crosscut_within(edges, chosen | v, blocked, allowed, budget - 1)) return true;
  }
  return false;
}

// Lexicographically smallest sorted vertex list of size k accepted by
// `feasible(chosen, allowed)`, given that one exists.
template <class Feasible>
VertexSet lex_smallest(int n, int k, Feasible&& feasible) {
  VertexSet chosen = 0;
  int last = 0;
  for (int slot = 0; slot < k; ++slot) {
    for (int v = last + 1; v <= n; ++v) {
      const VertexSet later = full_set(n) & ~full_set(v);
      if (feasible(chosen | vertex_bit(v), later, k - slot - 1)) {
        chosen |= vertex_bit(v);
        last = v;
        break;
      }
    }
  }
  return chosen;
}

}  // namespace

bool is_vertex_cover(const Hypergraph& h, VertexSet x) {
  for (VertexSet e : h.edges())
    if (!(e & x)) return false;
  return true;
}

bool is_crosscut(const Hypergraph& h, VertexSet x) {
  for (VertexSet e : h.edges())
    if (set_size(e & x) != 1) return false;
  return true;
}

CoverResult min_vertex_cover(const Hypergraph& h) {
  const auto edges = h.edges();
  const VertexSet all = full_set(h.n());
  int k = 0;
  while (!cover_within(edges, 0, all, k)) ++k;
  VertexSet w = lex_smallest(h.n(), k, [&](VertexSet chosen, VertexSet later, int budget) {
    return cover_within(edges, chosen, later, budget);
  });
  return {w};
}

CoverResult min_crosscut(const Hypergraph& h) {
  const auto edges = h.edges();
  const VertexSet all = full_set(h.n());
  if (!crosscut_within(edges, 0, 0, all, h.n())) return {};
  int k = 0;
  while (!crosscut_within(edges, 0, 0, all, k)) ++k;
  VertexSet w = lex_smallest(h.n(), k, [&](VertexSet chosen, VertexSet later, int budget) {
    VertexSet blocked = 0;
    for (VertexSet e : edges) {
      if (set_size(e & chosen) > 1) return false;
      if (e & chosen) blocked |= e;
    }
    blocked &= ~chosen;
    return crosscut_within(edges, chosen, blocked, later, budget);
  });
  return {w};
}

std::vector<int> critical_leaves(const BipartiteGraph& tree, int a, int b) {
  if (!tree.is_tree()) throw ParameterError("critical_leaves needs a tree skeleton");
  const auto whole = min_crosscut(blowup(tree, a, b).graph).size();
  std::vector<int> out;
  for (int v = 1; v <= tree.t(); ++v) {
    if (tree.degree_v(v) != 1) continue;
    const auto reduced = min_crosscut(blowup(tree.without_v(v), a, b).graph).size();
    if (reduced && whole && *reduced < *whole) out.push_back(v);
  }
  return out;
}

}  // namespace hgx
