#include "hgx/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

#include "hgx/canonical.hpp"
#include "hgx/covers.hpp"
#include "hgx/error.hpp"

namespace hgx {
namespace {

// Pattern edges up to automorphism: a copy through a host edge exists iff
// one exists with one of these representatives mapped onto it.
std::vector<PatternMatcher> anchored_matchers(const Hypergraph& pattern) {
  const HostIndex self(pattern);
  std::vector<VertexSet> reps;
  std::vector<PatternMatcher> out;
  for (VertexSet f : pattern.edges()) {
    bool covered = false;
    for (std::size_t i = 0; i < reps.size() && !covered; ++i) {
      std::uint64_t nodes = 0;
      covered = out[i].find(self, f, 0, nodes, nullptr) == SearchStatus::kFound;
    }
    if (covered) continue;
    reps.push_back(f);
    out.emplace_back(pattern, f);
  }
  return out;
}

struct Shared {
  std::atomic<std::size_t> incumbent{0};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::uint64_t budget = 0;
  std::mutex mu;
  // Best family found by the search itself (not the seed).
  std::optional<Hypergraph> witness;
  std::size_t witness_size = 0;
  std::map<std::string, Hypergraph> extremal;  // canonical form -> family
};

class Engine {
 public:
  Engine(int n, int r, const std::vector<std::vector<PatternMatcher>>& matchers, const SearchOptions& opt,
         const std::vector<std::optional<std::size_t>>& ex_sub, Shared& shared)
      : n_(n),
        r_(r),
        matchers_(matchers),
        opt_(opt),
        ex_sub_(ex_sub),
        shared_(shared),
        cands_(all_subsets(n, r)),
        host_(n, r),
        deg_(n + 1, 0),
        rem_(n + 1, 0) {
    for (VertexSet e : cands_)
      for (VertexSet s = e; s; s &= s - 1) ++rem_[first_vertex(s)];
    cap_ = SIZE_MAX;
    if (n > r && n - 1 < static_cast<int>(ex_sub_.size()) && ex_sub_[n - 1])
      cap_ = static_cast<std::size_t>(n) * *ex_sub_[n - 1] / static_cast<std::size_t>(n - r);
  }

  std::size_t cap() const { return cap_; }
  std::size_t candidates() const { return cands_.size(); }

  /// Apply a fixed include/exclude prefix; false if it is infeasible.
  bool apply_prefix(const std::vector<char>& decisions) {
    for (std::size_t p = 0; p < decisions.size(); ++p) {
      const VertexSet e = cands_[p];
      for (VertexSet s = e; s; s &= s - 1) --rem_[first_vertex(s)];
      if (decisions[p]) {
        include(e);
        if (!free_through(e)) return false;
      }
    }
    return true;
  }

  void run(std::size_t start) { dfs(start); }

  /// Feasible prefixes of the first `depth` decisions, include branch first.
  void prefixes(std::size_t depth, std::vector<char>& cur, std::vector<std::vector<char>>& out) {
    if (cur.size() == depth || cur.size() == cands_.size()) {
      out.push_back(cur);
      return;
    }
    const VertexSet e = cands_[cur.size()];
    for (VertexSet s = e; s; s &= s - 1) --rem_[first_vertex(s)];
    include(e);
    if (free_through(e)) {
      cur.push_back(1);
      prefixes(depth, cur, out);
      cur.pop_back();
    }
    exclude(e);
    cur.push_back(0);
    prefixes(depth, cur, out);
    cur.pop_back();
    for (VertexSet s = e; s; s &= s - 1) ++rem_[first_vertex(s)];
  }

 private:
  void include(VertexSet e) {
    host_.add(e);
    chosen_.push_back(e);
    for (VertexSet s = e; s; s &= s - 1) ++deg_[first_vertex(s)];
  }

  void exclude(VertexSet e) {
    host_.remove(e);
    chosen_.pop_back();
    for (VertexSet s = e; s; s &= s - 1) --deg_[first_vertex(s)];
  }

  bool free_through(VertexSet e) const {
    for (const auto& list : matchers_)
      for (const auto& m : list) {
        std::uint64_t dummy = 0;
        if (m.find(host_, e, 0, dummy, nullptr) == SearchStatus::kFound) return false;
      }
    return true;
  }

  // Upper bound on the final family size below this node, or 0 when the
  // node cannot lead to any admissible family.
  std::size_t bound(std::size_t p) const {
    const std::size_t count = chosen_.size();
    const std::size_t total = cands_.size();
    std::size_t best = std::min(count + (total - p), cap_);
    if (p < total) {
      const int j = 64 - std::countl_zero(cands_[p]);  // current block: max vertex of the next candidate
      for (int k = j; k < n_; ++k) {
        if (k >= static_cast<int>(ex_sub_.size()) || !ex_sub_[k]) continue;
        const std::size_t inside = binomial(k, r_);
        const std::size_t within = std::min<std::size_t>(*ex_sub_[k], count + (inside - p));
        best = std::min(best, within + (total - inside));
      }
    }
    const bool have_prev = n_ - 1 < static_cast<int>(ex_sub_.size()) && ex_sub_[n_ - 1];
    std::size_t min_ub = SIZE_MAX;
    std::size_t sum_ub = 0;
    std::size_t prefix_min = SIZE_MAX;
    for (int v = 1; v <= n_; ++v) {
      const std::size_t ub = static_cast<std::size_t>(deg_[v] + rem_[v]);
      min_ub = std::min(min_ub, ub);
      if (opt_.symmetry_pruning) {
        prefix_min = std::min(prefix_min, ub);
        if (prefix_min < static_cast<std::size_t>(deg_[v])) return 0;
        sum_ub += prefix_min;
      }
    }
    if (have_prev) best = std::min(best, *ex_sub_[n_ - 1] + (opt_.symmetry_pruning ? prefix_min : min_ub));
    if (opt_.symmetry_pruning) best = std::min(best, sum_ub / static_cast<std::size_t>(r_));
    return best;
  }

  bool hopeless(std::size_t b) const {
    const std::size_t inc = shared_.incumbent.load(std::memory_order_relaxed);
    return opt_.all_extremal ? b < inc : b <= inc;
  }

  void record() {
    const std::size_t count = chosen_.size();
    std::lock_guard lock(shared_.mu);
    const std::size_t inc = shared_.incumbent.load();
    if (count > inc || (count == inc && opt_.all_extremal)) {
      Hypergraph fam(n_, r_, chosen_);
      if (count > inc) {
        shared_.incumbent.store(count);
        shared_.extremal.clear();
      }
      if (opt_.all_extremal) shared_.extremal.emplace(canonical_form(fam), fam);
      if (!shared_.witness || count > shared_.witness_size) {
        shared_.witness = fam;
        shared_.witness_size = count;
      }
    }
  }

  void dfs(std::size_t p) {
    if (shared_.stop.load(std::memory_order_relaxed)) return;
    const std::uint64_t visited = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (shared_.budget && visited > shared_.budget) {
      shared_.stop.store(true);
      return;
    }
    if (p == cands_.size()) {
      record();
      return;
    }
    const std::size_t b = bound(p);
    if (b == 0 && chosen_.size() > 0) return;
    if (hopeless(b)) return;

    const VertexSet e = cands_[p];
    for (VertexSet s = e; s; s &= s - 1) --rem_[first_vertex(s)];
    include(e);
    if (free_through(e)) dfs(p + 1);
    exclude(e);
    dfs(p + 1);
    for (VertexSet s = e; s; s &= s - 1) ++rem_[first_vertex(s)];
  }

  int n_, r_;
  const std::vector<std::vector<PatternMatcher>>& matchers_;
  const SearchOptions& opt_;
  const std::vector<std::optional<std::size_t>>& ex_sub_;
  Shared& shared_;
  std::vector<VertexSet> cands_;
  HostIndex host_;
  std::vector<VertexSet> chosen_;
  std::vector<int> deg_;
  std::vector<int> rem_;
  std::size_t cap_;
};

bool pattern_free(const Hypergraph& h, const std::vector<Hypergraph>& forbidden) {
  for (const auto& f : forbidden)
    if (contains(h, f).found()) return false;
  return true;
}

std::optional<Hypergraph> best_seed(int n, int r, const std::vector<Hypergraph>& forbidden, SeedConstruction which) {
  std::optional<Hypergraph> best;
  auto consider = [&](const Hypergraph& h) {
    if (best && h.size() <= best->size()) return;
    if (pattern_free(h, forbidden)) best = h;
  };
  if (which == SeedConstruction::kNone) return best;
  for (int c = 0; c <= n; ++c) {
    if (which != SeedConstruction::kPsi1) consider(psi(n, r, c));
    if (which != SeedConstruction::kPsi && r <= n - c + 1) consider(psi1(n, r, c));
  }
  return best;
}

SearchResult solve(int n, int r, const std::vector<Hypergraph>& forbidden,
                   const std::vector<std::vector<PatternMatcher>>& matchers, const SearchOptions& opt,
                   const std::vector<std::optional<std::size_t>>& ex_sub) {
  Shared shared;
  shared.budget = opt.node_budget;
  const auto seed = best_seed(n, r, forbidden, opt.seed);
  if (seed) shared.incumbent = seed->size();

  SearchResult out;
  {
    Engine probe(n, r, matchers, opt, ex_sub, shared);
    if (seed && !opt.all_extremal && seed->size() >= probe.cap()) {
      out.max_edges = seed->size();
      out.witnesses = {*seed};
      out.exhausted = true;
      return out;
    }
  }

  const int threads = std::max(1, opt.threads);
  if (threads == 1) {
    Engine engine(n, r, matchers, opt, ex_sub, shared);
    engine.run(0);
  } else {
    Engine splitter(n, r, matchers, opt, ex_sub, shared);
    std::size_t depth = 1;
    while ((std::size_t{1} << depth) < static_cast<std::size_t>(threads) * 8) ++depth;
    depth = std::min(depth, splitter.candidates());
    std::vector<char> cur;
    std::vector<std::vector<char>> tasks;
    splitter.prefixes(depth, cur, tasks);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        Engine engine(n, r, matchers, opt, ex_sub, shared);
        if (engine.apply_prefix(tasks[i])) engine.run(tasks[i].size());
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  out.nodes = shared.nodes.load();
  out.exhausted = !shared.stop.load();
  out.max_edges = shared.incumbent.load();
  if (opt.all_extremal) {
    for (auto& [form, fam] : shared.extremal) out.witnesses.push_back(fam);
    if (out.witnesses.empty() && seed && seed->size() == out.max_edges) out.witnesses.push_back(*seed);
  } else if (shared.witness && shared.witness_size == out.max_edges && !(seed && seed->size() == out.max_edges)) {
    if (threads > 1 && out.exhausted) {
      // Re-derive the first maximum family in serial order so the witness
      // does not depend on thread timing.
      SearchOptions serial = opt;
      serial.threads = 1;
      serial.node_budget = 0;
      Shared again;
      again.incumbent = out.max_edges - 1;
      Engine engine(n, r, matchers, serial, ex_sub, again);
      engine.run(0);
      out.witnesses = {*again.witness};
    } else {
      out.witnesses = {*shared.witness};
    }
  } else if (seed && seed->size() == out.max_edges) {
    out.witnesses = {*seed};
  }
  return out;
}

}  // namespace

SearchResult max_free(int n, int r, const std::vector<Hypergraph>& forbidden, const SearchOptions& options) {
  if (r < 1 || n < r) throw ParameterError("max_free needs n >= r >= 1");
  if (n > kMaxVertices) throw UnsupportedSize("max_free supports at most 64 vertices");
  std::vector<Hypergraph> patterns;
  std::vector<std::vector<PatternMatcher>> matchers;
  int smallest_support = kMaxVertices + 1;
  for (const auto& f : forbidden) {
    if (f.r() != r) throw ParameterError("pattern uniformity differs from r");
    if (f.empty()) throw ParameterError("forbidden pattern has no edges");
    patterns.push_back(f);
    matchers.push_back(anchored_matchers(f));
    smallest_support = std::min(smallest_support, set_size(f.support()));
  }

  std::vector<std::optional<std::size_t>> ex_sub(n);
  if (options.subproblem_bounds) {
    SearchOptions sub = options;
    sub.all_extremal = false;
    for (int k = r; k < n; ++k) {
      if (k < smallest_support) {
        ex_sub[k] = binomial(k, r);
        continue;
      }
      auto res = solve(k, r, patterns, matchers, sub, ex_sub);
      if (res.exhausted) ex_sub[k] = res.max_edges;
    }
  }
  return solve(n, r, patterns, matchers, options, ex_sub);
}

std::size_t max_free_naive(int n, int r, const std::vector<Hypergraph>& forbidden) {
  const auto cands = all_subsets(n, r);
  const std::size_t m = cands.size();
  if (m > 24) throw UnsupportedSize("naive enumeration needs C(n,r) <= 24");
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const std::size_t size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= best && mask != 0) continue;
    std::vector<VertexSet> edges;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) edges.push_back(cands[i]);
    if (pattern_free(Hypergraph(n, r, std::move(edges)), forbidden)) best = std::max(best, size);
  }
  return best;
}

bool FreeReport::all_absent() const {
  return std::all_of(checks.begin(), checks.end(), [](const FreeCheck& c) { return c.status == SearchStatus::kAbsent; });
}

FreeReport verify_free(const Hypergraph& construction, const std::vector<NamedPattern>& forbidden, SearchLimits limits) {
  FreeReport out;
  int idx = 0;
  for (const auto& p : forbidden) {
    ContainResult res = p.blowup ? contains_blowup(construction, p.blowup->skeleton, p.blowup->a, p.blowup->b, limits)
                                 : contains(construction, p.graph, limits);
    out.checks.push_back({"pattern#" + std::to_string(++idx), res.status, res.embedding});
  }
  return out;
}

FreeReport verify_free(const Hypergraph& construction, const std::vector<Hypergraph>& forbidden, SearchLimits limits) {
  std::vector<NamedPattern> named;
  for (const auto& f : forbidden) named.push_back({f, std::nullopt});
  return verify_free(construction, named, limits);
}

bool GapReport::ok() const {
  return std::none_of(rows.begin(), rows.end(), [](const GapRow& r) { return r.violated; });
}

GapReport extremal_gap_report(int n, int r, const std::optional<NamedPattern>& pattern, const SearchOptions& options) {
  GapReport out;
  std::vector<Hypergraph> forbidden;
  if (pattern) forbidden.push_back(pattern->graph);
  if (forbidden.empty()) {
    out.search.max_edges = binomial(n, r);
    out.search.witnesses = {psi(n, r, n)};
    out.search.exhausted = true;
  } else {
    out.search = max_free(n, r, forbidden, options);
  }
  const Rational exact(static_cast<unsigned long long>(out.search.max_edges));
  out.rows.push_back({"search", std::to_string(out.search.max_edges), out.search.exhausted ? "exact" : "lower",
                      out.search.exhausted ? "exhaustive branch and bound" : "budget exhausted; incumbent only"});

  auto add = [&](const BoundReport& b, bool unconditional_upper) {
    GapRow row{b.name, b.value_string(), to_string(b.kind), b.validity_note, false};
    if (b.kind == BoundKind::kLower && out.search.exhausted && b.value > exact) row.violated = true;
    if (unconditional_upper && exact > b.value) row.violated = true;
    out.rows.push_back(row);
  };

  if (pattern) {
    const Hypergraph& f = pattern->graph;
    const auto tau = min_vertex_cover(f).size();
    if (tau && *tau >= 1) add(psi_lower(n, r, *tau), false);
    const auto sigma = min_crosscut(f).size();
    if (sigma && *sigma >= 1) add(crosscut_lower(n, r, *sigma), false);
    const int ell = static_cast<int>(f.size());
    const bool tight = is_tight_tree(f).is_tight_tree;
    if (r == 2 && isomorphic(f, ab_path(ell, 1, 1))) {
      add(erdos_gallai(n, ell), true);
      const BoundReport fs = faudree_schelp(n, ell);
      GapRow row{fs.name, fs.value_string(), to_string(fs.kind), fs.validity_note, false};
      if (out.search.exhausted && fs.value != exact) row.violated = true;
      if (!out.search.exhausted && exact > fs.value) row.violated = true;
      out.rows.push_back(row);
    }
    if (tight) {
      add(kalai_bound(n, r, ell), false);
      add(greedy_bound(n, r, ell), true);
    }
    if (pattern->blowup && r % 2 == 0 && pattern->blowup->a == r / 2 && pattern->blowup->b == r / 2 &&
        pattern->blowup->skeleton.is_tree() && 2 * n / r >= 2) {
      const int parts = 2 * n / r;
      const Hypergraph graph_tree = blowup(pattern->blowup->skeleton, 1, 1).graph;
      if (set_size(graph_tree.support()) <= parts || r == 2) {
        SearchOptions sub = options;
        sub.all_extremal = false;
        auto g = r == 2 ? out.search : max_free(parts, 2, {graph_tree}, sub);
        if (g.exhausted) add(frankl_half_bound(n, r, Rational(static_cast<unsigned long long>(g.max_edges))), false);
      }
    }
  }
  if (!out.ok()) {
    std::string msg = "bound violation for n=" + std::to_string(n) + " r=" + std::to_string(r) + ":";
    for (const auto& row : out.rows)
      if (row.violated) msg += " " + row.name + "=" + row.value;
    msg += " search=" + std::to_string(out.search.max_edges);
    throw IntegrityError(msg);
  }
  return out;
}

}  // namespace hgx
