#include "hgx/bipartite.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

#include "hgx/error.hpp"

namespace hgx {

BipartiteGraph::BipartiteGraph(int s, int t, std::vector<Edge> edges) : s_(s), t_(t), edges_(std::move(edges)) {
  if (s < 0 || t < 0) throw ParameterError("part sizes must be non-negative");
  for (auto [u, v] : edges_)
    if (u < 1 || u > s || v < 1 || v > t)
      throw ParameterError("bipartite edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool BipartiteGraph::has_edge(int u, int v) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

int BipartiteGraph::degree_u(int u) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [u](const Edge& e) { return e.first == u; }));
}

int BipartiteGraph::degree_v(int v) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.second == v; }));
}

std::vector<int> BipartiteGraph::neighbors_u(int u) const {
  std::vector<int> out;
  for (auto [a, b] : edges_)
    if (a == u) out.push_back(b);
  return out;
}

std::vector<int> BipartiteGraph::neighbors_v(int v) const {
  std::vector<int> out;
  for (auto [a, b] : edges_)
    if (b == v) out.push_back(a);
  return out;
}

bool BipartiteGraph::is_connected() const {
  const int total = s_ + t_;
  if (total <= 1) return true;
  std::vector<std::vector<int>> adj(total);
  for (auto [u, v] : edges_) {
    adj[u - 1].push_back(s_ + v - 1);
    adj[s_ + v - 1].push_back(u - 1);
  }
  std::vector<char> seen(total, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x])
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
  }
  return reached == total;
}

BipartiteGraph BipartiteGraph::without_u(int u) const {
  if (u < 1 || u > s_) throw ParameterError("no such U-vertex");
  std::vector<Edge> out;
  for (auto [a, b] : edges_)
    if (a != u) out.emplace_back(a > u ? a - 1 : a, b);
  return BipartiteGraph(s_ - 1, t_, std::move(out));
}

BipartiteGraph BipartiteGraph::without_v(int v) const {
  if (v < 1 || v > t_) throw ParameterError("no such V-vertex");
  std::vector<Edge> out;
  for (auto [a, b] : edges_)
    if (b != v) out.emplace_back(a, b > v ? b - 1 : b);
  return BipartiteGraph(s_, t_ - 1, std::move(out));
}

BipartiteGraph BipartiteGraph::swapped() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (auto [a, b] : edges_) out.emplace_back(b, a);
  return BipartiteGraph(t_, s_, std::move(out));
}

BipartiteGraph BipartiteGraph::path(int length) {
  if (length < 1) throw ParameterError("path length must be positive");
  const int s = length / 2 + 1;
  const int t = (length + 1) / 2;
  std::vector<Edge> edges;
  for (int i = 1; i <= length; ++i) {
    // edge i joins the i-th and (i+1)-th path vertices; odd positions are in U.
    if (i % 2 == 1)
      edges.emplace_back((i + 1) / 2, (i + 1) / 2);
    else
      edges.emplace_back(i / 2 + 1, i / 2);
  }
  return BipartiteGraph(s, t, std::move(edges));
}

BipartiteGraph BipartiteGraph::cycle(int length) {
  if (length < 4 || length % 2 != 0) throw ParameterError("bipartite cycle length must be even and at least 4");
  const int k = length / 2;
  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i) {
    edges.emplace_back(i, i);
    edges.emplace_back(i % k + 1, i);
  }
  return BipartiteGraph(k, k, std::move(edges));
}

BipartiteGraph BipartiteGraph::star(int leaves) {
  if (leaves < 1) throw ParameterError("star needs at least one leaf");
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(1, v);
  return BipartiteGraph(1, leaves, std::move(edges));
}

BipartiteGraph BipartiteGraph::double_star(int u_center_leaves, int v_center_leaves) {
  if (u_center_leaves < 0 || v_center_leaves < 0) throw ParameterError("leaf counts must be non-negative");
  // u1 and v1 are the centres; u1's leaves are v2.., v1's leaves are u2..
  const int s = 1 + v_center_leaves;
  const int t = 1 + u_center_leaves;
  std::vector<Edge> edges{{1, 1}};
  for (int j = 2; j <= t; ++j) edges.emplace_back(1, j);
  for (int i = 2; i <= s; ++i) edges.emplace_back(i, 1);
  return BipartiteGraph(s, t, std::move(edges));
}

BipartiteGraph BipartiteGraph::from_pruefer(const std::vector<int>& sequence) {
  const int n = static_cast<int>(sequence.size()) + 2;
  for (int x : sequence)
    if (x < 1 || x > n) throw ParameterError("Pruefer entry out of range");
  std::vector<int> deg(n + 1, 1);
  for (int x : sequence) ++deg[x];
  std::vector<std::pair<int, int>> graph_edges;
  std::set<int> leaves;
  for (int v = 1; v <= n; ++v)
    if (deg[v] == 1) leaves.insert(v);
  for (int x : sequence) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    graph_edges.emplace_back(leaf, x);
    if (--deg[x] == 1) leaves.insert(x);
  }
  graph_edges.emplace_back(*leaves.begin(), *std::next(leaves.begin()));

  std::vector<std::vector<int>> adj(n + 1);
  for (auto [x, y] : graph_edges) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  std::vector<int> colour(n + 1, -1);
  colour[1] = 0;
  std::queue<int> q;
  q.push(1);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : adj[x])
      if (colour[y] < 0) {
        colour[y] = 1 - colour[x];
        q.push(y);
      }
  }
  std::vector<int> index(n + 1);
  int s = 0, t = 0;
  for (int v = 1; v <= n; ++v) index[v] = colour[v] == 0 ? ++s : ++t;
  std::vector<Edge> edges;
  for (auto [x, y] : graph_edges) {
    if (colour[x] == 0)
      edges.emplace_back(index[x], index[y]);
    else
      edges.emplace_back(index[y], index[x]);
  }
  return BipartiteGraph(s, t, std::move(edges));
}

std::string tree_code(const BipartiteGraph& tree) {
  if (!tree.is_tree()) throw ParameterError("tree_code needs a tree");
  const int s = tree.s();
  const int total = s + tree.t();
  if (total == 1) return s == 1 ? "U()" : "V()";
  std::vector<std::vector<int>> adj(total);
  for (auto [u, v] : tree.edges()) {
    adj[u - 1].push_back(s + v - 1);
    adj[s + v - 1].push_back(u - 1);
  }
  // Peel leaves to find the one or two centres.
  std::vector<int> deg(total);
  std::vector<int> layer;
  for (int x = 0; x < total; ++x) {
    deg[x] = static_cast<int>(adj[x].size());
    if (deg[x] <= 1) layer.push_back(x);
  }
  int remaining = total;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int x : layer)
      for (int y : adj[x])
        if (--deg[y] == 1) next.push_back(y);
    layer = std::move(next);
  }
  std::function<std::string(int, int)> encode = [&](int x, int parent) {
    std::vector<std::string> kids;
    for (int y : adj[x])
      if (y != parent) kids.push_back(encode(y, x));
    std::sort(kids.begin(), kids.end());
    std::string out = x < s ? "U(" : "V(";
    for (const auto& k : kids) out += k;
    return out + ")";
  };
  std::string best;
  for (int c : layer) {
    std::string code = encode(c, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

std::string to_text(const BipartiteGraph& g) {
  std::string out = std::to_string(g.s()) + " " + std::to_string(g.t()) + " " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace hgx
