#include "hgx/embedding.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "hgx/error.hpp"

namespace hgx {

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound:
      return "found";
    case SearchStatus::kAbsent:
      return "absent";
    case SearchStatus::kBudgetExhausted:
      return "budget-exhausted";
  }
  return "?";
}

// ---------------------------------------------------------------- HostIndex

namespace {
constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 22;
}

HostIndex::HostIndex(int n, int r) : n_(n), r_(r), incident_(n) {
  const std::uint64_t slots = binomial(n, r);
  dense_ = slots <= kDenseLimit;
  if (dense_) present_.assign(slots, 0);
}

HostIndex::HostIndex(const Hypergraph& h) : HostIndex(h.n(), h.r()) {
  for (VertexSet e : h.edges()) add(e);
}

std::size_t HostIndex::rank(VertexSet e) const {
  std::size_t out = 0;
  int i = 1;
  for (VertexSet s = e; s; s &= s - 1, ++i) out += binomial(std::countr_zero(s), i);
  return out;
}

bool HostIndex::has(VertexSet e) const {
  if (dense_) return present_[rank(e)] != 0;
  return sparse_.count(e) != 0;
}

void HostIndex::add(VertexSet e) {
  if (dense_) {
    char& slot = present_[rank(e)];
    if (slot) return;
    slot = 1;
  } else if (!sparse_.insert(e).second) {
    return;
  }
  ++count_;
  for (VertexSet s = e; s; s &= s - 1) incident_[std::countr_zero(s)].push_back(e);
}

void HostIndex::remove(VertexSet e) {
  if (dense_) {
    char& slot = present_[rank(e)];
    if (!slot) return;
    slot = 0;
  } else if (sparse_.erase(e) == 0) {
    return;
  }
  --count_;
  for (VertexSet s = e; s; s &= s - 1) {
    auto& list = incident_[std::countr_zero(s)];
    auto it = std::find(list.rbegin(), list.rend(), e);
    list.erase(std::next(it).base());
  }
}

// ----------------------------------------------------------- PatternMatcher

namespace {

std::vector<int> pattern_degrees(const Hypergraph& p) {
  std::vector<int> deg(p.n() + 1, 0);
  for (VertexSet e : p.edges())
    for (int v : to_vertices(e)) ++deg[v];
  return deg;
}

// BFS over the "shares an edge" relation, seeded with `start` and restarted
// from a maximum-degree vertex in each further component.
std::vector<int> bfs_order(const Hypergraph& p, std::vector<int> start) {
  const auto deg = pattern_degrees(p);
  std::vector<VertexSet> nbr(p.n() + 1, 0);
  for (VertexSet e : p.edges())
    for (int v : to_vertices(e)) nbr[v] |= e & ~vertex_bit(v);
  auto better = [&](int x, int y) { return deg[x] != deg[y] ? deg[x] > deg[y] : x < y; };

  const VertexSet support = p.support();
  VertexSet seen = 0;
  std::vector<int> order;
  std::deque<int> queue;
  for (int v : start) {
    seen |= vertex_bit(v);
    order.push_back(v);
    queue.push_back(v);
  }
  while (true) {
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      std::vector<int> next = to_vertices(nbr[x] & ~seen);
      std::sort(next.begin(), next.end(), better);
      for (int y : next) {
        seen |= vertex_bit(y);
        order.push_back(y);
        queue.push_back(y);
      }
    }
    VertexSet rest = support & ~seen;
    if (!rest) break;
    std::vector<int> cand = to_vertices(rest);
    int root = *std::min_element(cand.begin(), cand.end(), better);
    seen |= vertex_bit(root);
    order.push_back(root);
    queue.push_back(root);
  }
  return order;
}

VertexSet image(VertexSet s, const std::vector<int>& map) {
  VertexSet out = 0;
  for (; s; s &= s - 1) out |= vertex_bit(map[first_vertex(s)]);
  return out;
}

}  // namespace

PatternMatcher::PatternMatcher(const Hypergraph& pattern) : pattern_(pattern) {
  plan(bfs_order(pattern_, {}));
}

PatternMatcher::PatternMatcher(const Hypergraph& pattern, VertexSet anchor) : pattern_(pattern) {
  if (!pattern_.has_edge(anchor)) throw ParameterError("anchor is not a pattern edge");
  anchored_ = static_cast<std::size_t>(pattern_.r());
  plan(bfs_order(pattern_, to_vertices(anchor)));
}

void PatternMatcher::plan(std::vector<int> order) {
  const auto deg = pattern_degrees(pattern_);
  VertexSet before = 0;
  for (int x : order) {
    Step step{x, deg[x], {}, {}};
    const VertexSet xb = vertex_bit(x);
    for (VertexSet e : pattern_.edges()) {
      if (!(e & xb)) continue;
      const VertexSet earlier = e & before;
      if (earlier) step.partial.push_back(earlier);
      if ((e & ~xb) == earlier) step.completed.push_back(e & ~xb);
    }
    // Most constrained partial sets first: they shrink candidates fastest.
    std::sort(step.partial.begin(), step.partial.end(),
              [](VertexSet a, VertexSet b) { return set_size(a) != set_size(b) ? set_size(a) > set_size(b) : a < b; });
    steps_.push_back(std::move(step));
    before |= xb;
  }
}

bool PatternMatcher::extend(std::size_t pos, const HostIndex& host, VertexSet host_anchor, VertexSet used,
                            std::vector<int>& map, std::uint64_t budget, std::uint64_t& nodes,
                            bool& exhausted) const {
  if (pos == steps_.size()) return true;
  const Step& step = steps_[pos];
  VertexSet cand = full_set(host.n()) & ~used;
  if (pos < anchored_ && host_anchor) cand &= host_anchor;
  for (VertexSet part : step.partial) {
    if (!cand) break;
    const VertexSet img = image(part, map);
    int pivot = 0, best = -1;
    for (VertexSet s = img; s; s &= s - 1) {
      int v = first_vertex(s);
      if (best < 0 || host.degree(v) < best) {
        best = host.degree(v);
        pivot = v;
      }
    }
    VertexSet reach = 0;
    for (VertexSet h : host.incident(pivot))
      if ((h & used) == img) reach |= h;
    cand &= reach & ~used;
  }
  if (!cand) return false;

  int order[kMaxVertices];
  int count = 0;
  for (VertexSet s = cand; s; s &= s - 1) {
    int y = first_vertex(s);
    if (host.degree(y) >= step.degree) order[count++] = y;
  }
  std::sort(order, order + count, [&](int x, int y) {
    return host.degree(x) != host.degree(y) ? host.degree(x) > host.degree(y) : x < y;
  });

  for (int k = 0; k < count; ++k) {
    const int y = order[k];
    if (budget && nodes >= budget) {
      exhausted = true;
      return false;
    }
    ++nodes;
    const VertexSet yb = vertex_bit(y);
    bool ok = true;
    for (VertexSet rest : step.completed)
      if (!host.has(image(rest, map) | yb)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    map[step.vertex] = y;
    if (extend(pos + 1, host, host_anchor, used | yb, map, budget, nodes, exhausted)) return true;
    map[step.vertex] = 0;
    if (exhausted) return false;
  }
  return false;
}

SearchStatus PatternMatcher::find(const HostIndex& host, VertexSet host_anchor, std::uint64_t budget,
                                  std::uint64_t& nodes, std::vector<int>* mapping) const {
  if (host.r() != pattern_.r()) throw ParameterError("pattern and host uniformities differ");
  std::vector<int> map(pattern_.n() + 1, 0);
  if (steps_.size() > static_cast<std::size_t>(host.n())) return SearchStatus::kAbsent;
  bool exhausted = false;
  const bool ok = extend(0, host, host_anchor, 0, map, budget, nodes, exhausted);
  if (ok) {
    if (mapping) *mapping = std::move(map);
    return SearchStatus::kFound;
  }
  return exhausted ? SearchStatus::kBudgetExhausted : SearchStatus::kAbsent;
}

ContainResult contains(const Hypergraph& host, const Hypergraph& pattern, SearchLimits limits) {
  if (host.r() != pattern.r()) throw ParameterError("pattern and host uniformities differ");
  ContainResult out;
  PatternMatcher matcher(pattern);
  HostIndex index(host);
  std::vector<int> map;
  out.status = matcher.find(index, 0, limits.node_budget, out.nodes, &map);
  if (out.found()) out.embedding = Embedding{std::move(map), std::nullopt};
  return out;
}

// --------------------------------------------------------- contains_blowup

namespace {

class BlowupSearch {
 public:
  BlowupSearch(const Hypergraph& host, const BipartiteGraph& sk, int a, int b, std::uint64_t budget)
      : host_(host), sk_(sk), a_(a), b_(b), budget_(budget), index_(host) {
    const int s = sk.s();
    const int total = s + sk.t();
    adj_.resize(total);
    for (auto [u, v] : sk.edges()) {
      adj_[u - 1].push_back(s + v - 1);
      adj_[s + v - 1].push_back(u - 1);
    }
    std::vector<char> seen(total, 0);
    auto better = [&](int x, int y) {
      return adj_[x].size() != adj_[y].size() ? adj_[x].size() > adj_[y].size() : x < y;
    };
    while (true) {
      int root = -1;
      for (int x = 0; x < total; ++x)
        if (!seen[x] && !adj_[x].empty() && (root < 0 || better(x, root))) root = x;
      if (root < 0) break;
      std::deque<int> queue{root};
      seen[root] = 1;
      while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        order_.push_back(x);
        std::vector<int> next;
        for (int y : adj_[x])
          if (!seen[y]) next.push_back(y);
        std::sort(next.begin(), next.end(), better);
        for (int y : next) {
          seen[y] = 1;
          queue.push_back(y);
        }
      }
    }
    block_.assign(total, 0);
  }

  SearchStatus run(std::uint64_t& nodes) {
    bool ok = extend(0, 0, nodes);
    if (ok) return SearchStatus::kFound;
    return exhausted_ ? SearchStatus::kBudgetExhausted : SearchStatus::kAbsent;
  }

  const std::vector<VertexSet>& blocks() const { return block_; }

 private:
  int block_size(int x) const { return x < sk_.s() ? a_ : b_; }

  bool extend(std::size_t pos, VertexSet used, std::uint64_t& nodes) {
    if (pos == order_.size()) return true;
    const int x = order_[pos];
    const int size = block_size(x);
    std::vector<int> placed;
    for (int y : adj_[x])
      if (block_[y]) placed.push_back(y);

    std::vector<VertexSet> cand;
    if (placed.empty()) {
      for (VertexSet h : host_.edges())
        if (!(h & used)) for_each_subset(h, size, [&](VertexSet s) { cand.push_back(s); });
    } else {
      // Grow from the placed neighbour with the fewest incident host edges.
      int pivot = placed.front();
      std::size_t best = SIZE_MAX;
      for (int y : placed) {
        std::size_t d = index_.incident(first_vertex(block_[y])).size();
        if (d < best) {
          best = d;
          pivot = y;
        }
      }
      const VertexSet pb = block_[pivot];
      for (VertexSet h : index_.incident(first_vertex(pb)))
        if (is_subset(pb, h) && !(h & ~pb & used)) cand.push_back(h & ~pb);
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    for (VertexSet c : cand) {
      if (budget_ && nodes >= budget_) {
        exhausted_ = true;
        return false;
      }
      ++nodes;
      bool ok = true;
      for (int y : placed)
        if (!index_.has(c | block_[y])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      block_[x] = c;
      if (extend(pos + 1, used | c, nodes)) return true;
      block_[x] = 0;
      if (exhausted_) return false;
    }
    return false;
  }

  const Hypergraph& host_;
  const BipartiteGraph& sk_;
  int a_, b_;
  std::uint64_t budget_;
  HostIndex index_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> order_;
  std::vector<VertexSet> block_;
  bool exhausted_ = false;
};

}  // namespace

ContainResult contains_blowup(const Hypergraph& host, const BipartiteGraph& skeleton, int a, int b,
                              SearchLimits limits) {
  if (a < 1 || b < 1) throw ParameterError("block sizes must be positive");
  if (a + b != host.r()) throw ParameterError("a + b must equal the host uniformity");
  ContainResult out;
  BlowupSearch search(host, skeleton, a, b, limits.node_budget);
  out.status = search.run(out.nodes);
  if (!out.found()) return out;

  const int s = skeleton.s();
  BlockMap blocks;
  for (int i = 0; i < s; ++i) blocks.u_blocks.push_back(search.blocks()[i]);
  for (int j = 0; j < skeleton.t(); ++j) blocks.v_blocks.push_back(search.blocks()[s + j]);
  // Vertex map in the standard blowup layout, block members in label order.
  const int n = std::max(a * s + b * skeleton.t(), a + b);
  std::vector<int> map(n + 1, 0);
  auto place = [&](int first_label, VertexSet img) {
    int label = first_label;
    for (int v : to_vertices(img)) map[label++] = v;
  };
  for (int i = 0; i < s; ++i) place(i * a + 1, blocks.u_blocks[i]);
  for (int j = 0; j < skeleton.t(); ++j) place(a * s + j * b + 1, blocks.v_blocks[j]);
  out.embedding = Embedding{std::move(map), std::move(blocks)};
  return out;
}

bool validate_embedding(const Hypergraph& host, const Hypergraph& pattern, const Embedding& emb) {
  if (static_cast<int>(emb.vertex_map.size()) < pattern.n() + 1) return false;
  VertexSet seen = 0;
  const VertexSet support = pattern.support();
  for (int x = 1; x <= pattern.n(); ++x) {
    if (!(support & vertex_bit(x))) continue;
    const int y = emb.vertex_map[x];
    if (y < 1 || y > host.n()) return false;
    if (seen & vertex_bit(y)) return false;
    seen |= vertex_bit(y);
  }
  for (VertexSet e : pattern.edges())
    if (!host.has_edge(image(e, emb.vertex_map))) return false;
  return true;
}

bool validate_block_embedding(const Hypergraph& host, const BipartiteGraph& skeleton, int a, int b,
                              const Embedding& emb) {
  if (!emb.blocks) return false;
  const auto& bl = *emb.blocks;
  if (static_cast<int>(bl.u_blocks.size()) != skeleton.s() || static_cast<int>(bl.v_blocks.size()) != skeleton.t())
    return false;
  std::vector<char> active_u(skeleton.s() + 1, 0), active_v(skeleton.t() + 1, 0);
  for (auto [u, v] : skeleton.edges()) active_u[u] = active_v[v] = 1;
  VertexSet used = 0;
  auto take = [&](VertexSet blk, int size) {
    if (set_size(blk) != size || (blk & used)) return false;
    used |= blk;
    return true;
  };
  for (int i = 1; i <= skeleton.s(); ++i)
    if (active_u[i] && !take(bl.u_blocks[i - 1], a)) return false;
  for (int j = 1; j <= skeleton.t(); ++j)
    if (active_v[j] && !take(bl.v_blocks[j - 1], b)) return false;
  for (auto [u, v] : skeleton.edges())
    if (!host.has_edge(bl.u_blocks[u - 1] | bl.v_blocks[v - 1])) return false;
  return true;
}

// ------------------------------------------------------------- tight trees

TightTreeResult is_tight_tree(const Hypergraph& h) {
  TightTreeResult out;
  const auto edges = h.edges();
  const std::size_t m = edges.size();
  if (m == 0) return out;
  if (m > 63) throw UnsupportedSize("is_tight_tree supports at most 63 edges");
  const int r = h.r();
  const std::uint64_t all = (std::uint64_t{1} << m) - 1;
  std::unordered_set<std::uint64_t> dead;
  std::vector<VertexSet> order;

  std::function<bool(std::uint64_t, VertexSet)> grow = [&](std::uint64_t added, VertexSet uni) {
    if (added == all) return true;
    if (dead.count(added)) return false;
    for (std::size_t i = 0; i < m; ++i) {
      if (added >> i & 1) continue;
      const VertexSet meet = edges[i] & uni;
      if (set_size(meet) != r - 1) continue;
      bool inside = false;
      for (std::size_t j = 0; j < m && !inside; ++j)
        if ((added >> j & 1) && is_subset(meet, edges[j])) inside = true;
      if (!inside) continue;
      order.push_back(edges[i]);
      if (grow(added | (std::uint64_t{1} << i), uni | edges[i])) return true;
      order.pop_back();
    }
    dead.insert(added);
    return false;
  };

  for (std::size_t start = 0; start < m; ++start) {
    order.assign(1, edges[start]);
    if (grow(std::uint64_t{1} << start, edges[start])) {
      out.is_tight_tree = true;
      out.order = order;
      return out;
    }
  }
  return out;
}

Hypergraph prune_low_codegree(const Hypergraph& g, int ell) {
  std::vector<VertexSet> edges(g.edges().begin(), g.edges().end());
  const int r = g.r();
  while (true) {
    std::map<VertexSet, int> codeg;
    for (VertexSet e : edges) for_each_subset(e, r - 1, [&](VertexSet s) { ++codeg[s]; });
    // Delete the first low set in colex order, then recount.
    VertexSet victim = 0;
    bool found = false;
    for (auto [s, d] : codeg)
      if (d <= ell - 1) {
        victim = s;
        found = true;
        break;
      }
    if (!found) break;
    std::erase_if(edges, [victim](VertexSet e) { return is_subset(victim, e); });
  }
  return Hypergraph(g.n(), r, std::move(edges));
}

std::optional<Embedding> greedy_tight_tree(const Hypergraph& g, const Hypergraph& tree) {
  if (tree.r() != g.r()) throw ParameterError("tree and host uniformities differ");
  const auto cert = is_tight_tree(tree);
  if (!cert.is_tight_tree) throw ParameterError("pattern is not a tight tree");
  const int ell = static_cast<int>(tree.size());
  const Hypergraph core = prune_low_codegree(g, ell);
  if (core.empty()) return std::nullopt;

  std::vector<int> map(tree.n() + 1, 0);
  const VertexSet first = cert.order.front();
  {
    auto from = to_vertices(first);
    auto to = to_vertices(core.edges().front());
    for (std::size_t i = 0; i < from.size(); ++i) map[from[i]] = to[i];
  }
  VertexSet covered = first;
  VertexSet used = core.edges().front();
  for (std::size_t i = 1; i < cert.order.size(); ++i) {
    const VertexSet e = cert.order[i];
    const VertexSet old_part = e & covered;
    const int fresh = first_vertex(e & ~covered);
    const VertexSet img = image(old_part, map);
    int pick = 0;
    for (VertexSet h : core.edges())
      if (is_subset(img, h) && !(h & ~img & used)) {
        pick = first_vertex(h & ~img);
        break;
      }
    if (!pick) return std::nullopt;  // unreachable on a correctly pruned core
    map[fresh] = pick;
    used |= vertex_bit(pick);
    covered |= e;
  }
  return Embedding{std::move(map), std::nullopt};
}

// ------------------------------------------------------ bipartite tree grower

bool BipartiteCore::empty() const {
  return std::none_of(a_alive.begin(), a_alive.end(), [](char c) { return c != 0; }) &&
         std::none_of(b_alive.begin(), b_alive.end(), [](char c) { return c != 0; });
}

BipartiteCore min_degree_core(const BipartiteGraph& h0, int a_min_degree, int b_min_degree) {
  BipartiteCore core{std::vector<char>(h0.s() + 1, 1), std::vector<char>(h0.t() + 1, 1)};
  core.a_alive[0] = core.b_alive[0] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> da(h0.s() + 1, 0), db(h0.t() + 1, 0);
    for (auto [u, v] : h0.edges())
      if (core.a_alive[u] && core.b_alive[v]) {
        ++da[u];
        ++db[v];
      }
    for (int u = 1; u <= h0.s(); ++u)
      if (core.a_alive[u] && da[u] < a_min_degree) {
        core.a_alive[u] = 0;
        changed = true;
      }
    for (int v = 1; v <= h0.t(); ++v)
      if (core.b_alive[v] && db[v] < b_min_degree) {
        core.b_alive[v] = 0;
        changed = true;
      }
  }
  return core;
}

std::optional<TreeEmbedding> grow_tree_in_bipartite(const BipartiteGraph& h0, const BipartiteGraph& tree) {
  if (!tree.is_tree()) throw ParameterError("grow_tree_in_bipartite needs a tree");
  const int s = tree.s(), t = tree.t();
  const auto core = min_degree_core(h0, t, s);
  TreeEmbedding out{std::vector<int>(s, 0), std::vector<int>(t, 0)};

  int root_a = 0;
  for (int u = 1; u <= h0.s() && !root_a; ++u)
    if (core.a_alive[u]) root_a = u;
  if (s == 0) {
    // A lone V-vertex.
    for (int v = 1; v <= h0.t(); ++v)
      if (core.b_alive[v]) {
        out.v_to_b[0] = v;
        return out;
      }
    return std::nullopt;
  }
  if (!root_a) return std::nullopt;

  std::vector<char> used_a(h0.s() + 1, 0), used_b(h0.t() + 1, 0);
  out.u_to_a[0] = root_a;
  used_a[root_a] = 1;
  std::deque<std::pair<bool, int>> queue{{true, 1}};  // (is U-side, index)
  std::vector<char> done_u(s + 1, 0), done_v(t + 1, 0);
  done_u[1] = 1;
  while (!queue.empty()) {
    auto [is_u, x] = queue.front();
    queue.pop_front();
    if (is_u) {
      const int img = out.u_to_a[x - 1];
      for (int y : tree.neighbors_u(x)) {
        if (done_v[y]) continue;
        int pick = 0;
        for (int v : h0.neighbors_u(img))
          if (core.b_alive[v] && !used_b[v]) {
            pick = v;
            break;
          }
        if (!pick) return std::nullopt;
        out.v_to_b[y - 1] = pick;
        used_b[pick] = 1;
        done_v[y] = 1;
        queue.emplace_back(false, y);
      }
    } else {
      const int img = out.v_to_b[x - 1];
      for (int y : tree.neighbors_v(x)) {
        if (done_u[y]) continue;
        int pick = 0;
        for (int u : h0.neighbors_v(img))
          if (core.a_alive[u] && !used_a[u]) {
            pick = u;
            break;
          }
        if (!pick) return std::nullopt;
        out.u_to_a[y - 1] = pick;
        used_a[pick] = 1;
        done_u[y] = 1;
        queue.emplace_back(true, y);
      }
    }
  }
  return out;
}

}  // namespace hgx
