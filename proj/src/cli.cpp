#include "hgx/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "hgx/acceptance.hpp"
#include "hgx/bounds.hpp"
#include "hgx/canonical.hpp"
#include "hgx/constructions.hpp"
#include "hgx/covers.hpp"
#include "hgx/embedding.hpp"
#include "hgx/error.hpp"
#include "hgx/io.hpp"
#include "hgx/random.hpp"
#include "hgx/search.hpp"
#include "hgx/templates.hpp"

namespace hgx::cli {
namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ordered_json edges_json(const Hypergraph& h) {
  ordered_json list = ordered_json::array();
  for (VertexSet e : h.edges()) list.push_back(to_vertices(e));
  return list;
}

ordered_json graph_json(const Hypergraph& h) {
  return {{"n", h.n()}, {"r", h.r()}, {"m", h.size()}, {"edges", edges_json(h)}};
}

ordered_json set_json(VertexSet s) { return to_vertices(s); }

ordered_json embedding_json(const Embedding& e) {
  ordered_json map = ordered_json::object();
  for (std::size_t v = 1; v < e.vertex_map.size(); ++v)
    if (e.vertex_map[v]) map[std::to_string(v)] = e.vertex_map[v];
  ordered_json out{{"vertex_map", map}};
  if (e.blocks) {
    ordered_json u = ordered_json::array(), v = ordered_json::array();
    for (VertexSet b : e.blocks->u_blocks) u.push_back(set_json(b));
    for (VertexSet b : e.blocks->v_blocks) v.push_back(set_json(b));
    out["u_blocks"] = u;
    out["v_blocks"] = v;
  }
  return out;
}

std::string embedding_text(const Embedding& e) {
  std::string s;
  for (std::size_t v = 1; v < e.vertex_map.size(); ++v)
    if (e.vertex_map[v]) s += (s.empty() ? "" : " ") + std::to_string(v) + "->" + std::to_string(e.vertex_map[v]);
  return s;
}

std::vector<int> colon_ints(const std::string& spec, std::size_t from) {
  std::vector<int> out;
  std::stringstream ss(spec.substr(from));
  std::string tok;
  while (std::getline(ss, tok, ':')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("bad integer '" + tok + "' in '" + spec + "'");
    }
  }
  return out;
}

/// A file path, a builtin pattern, or one of psi:n:r:c, psi1:n:r:c,
/// nostability:n:r, complete:n:r, fano.
Hypergraph resolve_graph(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) return read_hypergraph_file(spec);
  auto with = [&](const char* prefix, std::size_t arity) -> std::optional<std::vector<int>> {
    const std::string p = std::string(prefix) + ":";
    if (spec.rfind(p, 0) != 0) return std::nullopt;
    auto v = colon_ints(spec, p.size());
    if (v.size() != arity) throw UsageError("'" + spec + "' needs " + std::to_string(arity) + " numbers");
    return v;
  };
  if (spec == "fano") return fano_plane();
  if (auto v = with("psi", 3)) return psi((*v)[0], (*v)[1], (*v)[2]);
  if (auto v = with("psi1", 3)) return psi1((*v)[0], (*v)[1], (*v)[2]);
  if (auto v = with("nostability", 2)) return no_stability_example((*v)[0], (*v)[1]);
  if (auto v = with("complete", 2)) return psi((*v)[0], (*v)[1], (*v)[0]);
  return builtin_pattern(spec).graph;
}

NamedPattern resolve_pattern(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) return {read_hypergraph_file(spec), std::nullopt};
  try {
    return builtin_pattern(spec);
  } catch (const ParameterError&) {
    return {resolve_graph(spec), std::nullopt};
  }
}

std::vector<VertexSet> parse_family(const std::string& text) {
  // "1 2,3 4" -> {1,2},{3,4}
  std::vector<VertexSet> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::stringstream ps(part);
    std::vector<int> vs;
    int v;
    while (ps >> v) vs.push_back(v);
    if (vs.empty()) throw UsageError("empty set in '" + text + "'");
    out.push_back(make_set(vs));
  }
  return out;
}

int threads_from_env(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("HGX_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

struct Options {
  bool json = false;
  // construct
  std::string kind;
  int n = 0, r = 0, c = 0, ell = 0, a = 0, b = 0;
  std::string spec;
  std::optional<std::uint64_t> seed;
  std::string out_path;
  // invariants / contains / verify free
  std::string input;
  std::string host;
  std::string pattern;
  std::uint64_t budget = 0;
  bool blowup_engine = false;
  // ex
  std::vector<std::string> forbid;
  bool all_extremal = false;
  int threads = 0;
  std::string seed_construction = "auto";
  bool symmetry = false;
  // bounds
  std::optional<int> tau, sigma, lambda;
  std::optional<std::string> ex_graph;
  std::optional<std::uint64_t> kk_m;
  int kk_k = 3;
  bool gap = false;
  // template
  double alpha = 0.5, m = 1, delta = 1;
  int s = 2, t = 2;
  std::string A, B;
  int pairs = 0;
  // verify
  std::vector<int> only;
  bool no_timing = false;
};

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

int cmd_construct(const Options& o, std::ostream& out) {
  Hypergraph h(1, 1);
  const std::string& k = o.kind;
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw UsageError("construct " + k + " needs " + what);
  };
  if (k == "psi" || k == "psi1") {
    need(o.n > 0 && o.r > 0, "--n, --r and --c");
    h = k == "psi" ? psi(o.n, o.r, o.c) : psi1(o.n, o.r, o.c);
  } else if (k == "tightpath" || k == "loosepath") {
    need(o.ell > 0 && o.r > 0, "--ell and --r");
    h = k == "tightpath" ? tight_path(o.ell, o.r) : loose_path(o.ell, o.r);
  } else if (k == "abpath") {
    need(o.ell > 0 && o.a > 0 && o.b > 0, "--ell, --a and --b");
    h = ab_path(o.ell, o.a, o.b);
  } else if (k == "c4") {
    need(o.a > 0 && o.b > 0, "--a and --b");
    h = c4_blowup(o.a, o.b);
  } else if (k == "fano") {
    h = fano_plane();
  } else if (k == "nostability") {
    need(o.n > 0 && o.r > 0, "--n and --r");
    h = no_stability_example(o.n, o.r, o.seed);
  } else if (k == "pattern") {
    need(!o.spec.empty(), "--spec");
    h = builtin_pattern(o.spec).graph;
  } else {
    throw UsageError("unknown construction '" + k + "'");
  }
  const std::string text = serialize_hypergraph(h);
  if (!o.out_path.empty()) write_text_file(o.out_path, text);
  if (o.json) {
    ordered_json j{{"schema", 1}, {"command", "construct"}, {"kind", k}, {"hypergraph", graph_json(h)}};
    emit(out, j);
  } else if (o.out_path.empty()) {
    out << text;
  } else {
    out << "wrote " << h.size() << " edges to " << o.out_path << "\n";
  }
  return kExitOk;
}

int cmd_invariants(const Options& o, std::ostream& out) {
  const Hypergraph h = resolve_graph(o.input);
  const auto tau = min_vertex_cover(h);
  const auto sigma = min_crosscut(h);
  std::vector<std::size_t> shadows;
  for (int p = 1; p < h.r(); ++p) shadows.push_back(shadow(h, p).size());
  const bool tight = h.size() <= 63 && !h.empty() && is_tight_tree(h).is_tight_tree;
  if (o.json) {
    ordered_json j{{"schema", 1}, {"command", "invariants"}, {"n", h.n()}, {"r", h.r()}, {"m", h.size()},
                   {"tau", *tau.size()}, {"tau_witness", set_json(*tau.witness)}};
    j["sigma"] = sigma.exists() ? ordered_json(*sigma.size()) : ordered_json(nullptr);
    j["sigma_witness"] = sigma.exists() ? set_json(*sigma.witness) : ordered_json(nullptr);
    ordered_json sh = ordered_json::object();
    for (std::size_t p = 0; p < shadows.size(); ++p) sh[std::to_string(p + 1)] = shadows[p];
    j["shadow_sizes"] = sh;
    j["tight_tree"] = tight;
    emit(out, j);
    return kExitOk;
  }
  out << "n: " << h.n() << "\nr: " << h.r() << "\nm: " << h.size() << "\n";
  out << "tau: " << *tau.size() << " " << set_to_string(*tau.witness) << "\n";
  if (sigma.exists())
    out << "sigma: " << *sigma.size() << " " << set_to_string(*sigma.witness) << "\n";
  else
    out << "sigma: none\n";
  for (std::size_t p = 0; p < shadows.size(); ++p) out << "shadow_" << p + 1 << ": " << shadows[p] << "\n";
  out << "tight_tree: " << (tight ? "yes" : "no") << "\n";
  return kExitOk;
}

int status_exit(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound:
      return kExitOk;
    case SearchStatus::kAbsent:
      return kExitNegative;
    case SearchStatus::kBudgetExhausted:
      return kExitBudget;
  }
  return kExitUsage;
}

int cmd_contains(const Options& o, std::ostream& out) {
  const Hypergraph host = resolve_graph(o.host);
  const NamedPattern pat = resolve_pattern(o.pattern);
  const SearchLimits limits{o.budget};
  ContainResult res;
  if (o.blowup_engine) {
    if (!pat.blowup) throw UsageError("--blowup needs a blowup-shaped builtin pattern");
    res = contains_blowup(host, pat.blowup->skeleton, pat.blowup->a, pat.blowup->b, limits);
  } else {
    res = contains(host, pat.graph, limits);
  }
  if (o.json) {
    ordered_json j{{"schema", 1}, {"command", "contains"}, {"status", to_string(res.status)}, {"nodes", res.nodes}};
    j["embedding"] = res.embedding ? embedding_json(*res.embedding) : ordered_json(nullptr);
    emit(out, j);
  } else {
    out << "status: " << to_string(res.status) << "\nnodes: " << res.nodes << "\n";
    if (res.embedding) out << "embedding: " << embedding_text(*res.embedding) << "\n";
  }
  return status_exit(res.status);
}

SeedConstruction seed_mode(const std::string& s) {
  if (s == "auto") return SeedConstruction::kAuto;
  if (s == "psi") return SeedConstruction::kPsi;
  if (s == "psi1") return SeedConstruction::kPsi1;
  if (s == "none") return SeedConstruction::kNone;
  throw UsageError("--seed-construction must be psi, psi1, none or auto");
}

SearchOptions search_options(const Options& o) {
  SearchOptions opt;
  opt.node_budget = o.budget;
  opt.all_extremal = o.all_extremal;
  opt.threads = threads_from_env(o.threads);
  opt.seed = seed_mode(o.seed_construction);
  opt.symmetry_pruning = o.symmetry;
  return opt;
}

int cmd_ex(const Options& o, std::ostream& out) {
  std::vector<Hypergraph> forbidden;
  for (const auto& f : o.forbid) forbidden.push_back(resolve_pattern(f).graph);
  const auto res = max_free(o.n, o.r, forbidden, search_options(o));
  if (o.json) {
    ordered_json w = ordered_json::array();
    for (const auto& h : res.witnesses) w.push_back(graph_json(h));
    emit(out, {{"schema", 1},
               {"command", "ex"},
               {"n", o.n},
               {"r", o.r},
               {"max_edges", res.max_edges},
               {"exhausted", res.exhausted},
               {"nodes", res.nodes},
               {"witnesses", w}});
  } else {
    out << "max_edges: " << res.max_edges << "\nexhausted: " << (res.exhausted ? "true" : "false")
        << "\nnodes: " << res.nodes << "\nwitnesses: " << res.witnesses.size() << "\n";
    for (const auto& h : res.witnesses) out << "\n" << serialize_hypergraph(h);
  }
  return res.exhausted ? kExitOk : kExitBudget;
}

ordered_json bound_json(const BoundReport& b) {
  return {{"name", b.name}, {"value", b.value_string()}, {"approx", b.as_double()}, {"kind", to_string(b.kind)},
          {"note", b.validity_note}};
}

int cmd_bounds(const Options& o, std::ostream& out) {
  if (o.gap) {
    std::optional<NamedPattern> pat;
    if (!o.forbid.empty()) {
      if (o.forbid.size() > 1) throw UsageError("--gap takes a single --forbid pattern");
      pat = resolve_pattern(o.forbid.front());
    }
    GapReport rep;
    try {
      rep = extremal_gap_report(o.n, o.r, pat, search_options(o));
    } catch (const IntegrityError& e) {
      if (o.json)
        emit(out, {{"schema", 1}, {"command", "bounds"}, {"integrity_error", e.what()}});
      else
        out << "integrity error: " << e.what() << "\n";
      return kExitIntegrity;
    }
    if (o.json) {
      ordered_json rows = ordered_json::array();
      for (const auto& r : rep.rows)
        rows.push_back({{"name", r.name}, {"value", r.value}, {"kind", r.kind}, {"note", r.note}});
      emit(out, {{"schema", 1}, {"command", "bounds"}, {"exhausted", rep.search.exhausted}, {"rows", rows}});
    } else {
      out << std::left << std::setw(16) << "bound" << std::setw(14) << "value" << std::setw(13) << "kind" << "note\n";
      for (const auto& r : rep.rows)
        out << std::setw(16) << r.name << std::setw(14) << r.value << std::setw(13) << r.kind << r.note << "\n";
    }
    return rep.search.exhausted ? kExitOk : kExitBudget;
  }

  std::vector<BoundReport> rows;
  if (o.ell > 0) {
    if (o.r == 2) {
      rows.push_back(erdos_gallai(o.n, o.ell));
      rows.push_back(faudree_schelp(o.n, o.ell));
    }
    rows.push_back(kalai_bound(o.n, o.r, o.ell));
    rows.push_back(greedy_bound(o.n, o.r, o.ell));
    auto [lo, up] = tight_path_bounds(o.n, o.r, o.ell);
    rows.push_back(lo);
    rows.push_back(up);
  }
  if (o.tau) rows.push_back(psi_lower(o.n, o.r, *o.tau));
  if (o.sigma) rows.push_back(crosscut_lower(o.n, o.r, *o.sigma));
  if (o.lambda) rows.push_back(steiner_lower(o.n, o.r, *o.lambda));
  if (o.ex_graph) {
    Rational v;
    try {
      v = Rational(*o.ex_graph);
    } catch (const std::exception&) {
      throw UsageError("--ex-graph must be a rational number");
    }
    rows.push_back(frankl_half_bound(o.n, o.r, v));
  }
  std::optional<double> kk;
  if (o.kk_m) kk = kk_shadow_bound(*o.kk_m, o.kk_k);
  if (rows.empty() && !kk) throw UsageError("bounds needs --ell, --tau, --sigma, --lambda, --ex-graph, --kk-m or --gap");
  if (o.json) {
    ordered_json list = ordered_json::array();
    for (const auto& b : rows) list.push_back(bound_json(b));
    ordered_json j{{"schema", 1}, {"command", "bounds"}, {"n", o.n}, {"r", o.r}, {"bounds", list}};
    if (kk) j["kk_shadow_bound"] = *kk;
    emit(out, j);
  } else {
    out << std::left << std::setw(18) << "bound" << std::setw(14) << "value" << std::setw(13) << "kind" << "note\n";
    for (const auto& b : rows)
      out << std::setw(18) << b.name << std::setw(14) << b.value_string() << std::setw(13) << to_string(b.kind)
          << b.validity_note << "\n";
    if (kk) out << "kk_shadow_bound(" << *o.kk_m << "," << o.kk_k << "): " << std::setprecision(12) << *kk << "\n";
  }
  return kExitOk;
}

int cmd_template_sample(const Options& o, std::ostream& out) {
  const Hypergraph host = resolve_graph(o.host);
  if (o.a <= 0) throw UsageError("template sample needs --a");
  const HeavySets hs = heavy_sets(host, o.a, o.m);
  const SamplerParams params{o.alpha, o.m, o.seed.value_or(0), o.delta};
  const SampledTemplate st = sample_template(host, o.a, params, hs.L);
  const TemplateIncidence inc = incidence(host, st.T);
  const TemplateDiagnostics d = template_diagnostics(host.n(), host.r(), o.a, o.s, params);
  const NearCrosscut nc = extract_near_crosscut(host, o.a, o.m);
  if (o.json) {
    emit(out, {{"schema", 1},
               {"command", "template sample"},
               {"heavy_sets", hs.D.size()},
               {"L", set_json(hs.L)},
               {"R", set_json(st.R)},
               {"A", st.T.A.size()},
               {"B", st.T.B.size()},
               {"B0", st.B0.size()},
               {"B1", st.B1.size()},
               {"H0", inc.H0.size()},
               {"H1", inc.H1.size()},
               {"F", nc.F.size()},
               {"beta0", d.beta0},
               {"beta1", d.beta1},
               {"p0", d.p0},
               {"p1", d.p1},
               {"guard_m_above_r_to_r", d.m_above_r_to_r},
               {"guard_m_below_sqrt_n", d.m_below_sqrt_n},
               {"guard_alpha_below_one_over_r", d.alpha_below_one_over_r}});
    return kExitOk;
  }
  out << "heavy_sets: " << hs.D.size() << "\nL: " << set_to_string(hs.L) << "\nR: " << set_to_string(st.R)
      << "\n|A|: " << st.T.A.size() << "\n|B|: " << st.T.B.size() << "\n|B0|: " << st.B0.size()
      << "\n|B1|: " << st.B1.size() << "\n|H0|: " << inc.H0.size() << "\n|H1|: " << inc.H1.size()
      << "\n|F|: " << nc.F.size() << "\nbeta0: " << d.beta0 << "\nbeta1: " << d.beta1 << "\np0: " << d.p0
      << "\np1: " << d.p1 << "\nguard m > r^r: " << (d.m_above_r_to_r ? "holds" : "fails")
      << "\nguard m < sqrt(n): " << (d.m_below_sqrt_n ? "holds" : "fails")
      << "\nguard alpha < 1/r: " << (d.alpha_below_one_over_r ? "holds" : "fails") << "\n";
  return kExitOk;
}

int cmd_template_verify(const Options& o, std::ostream& out) {
  const Hypergraph host = resolve_graph(o.host);
  if (o.a <= 0 || o.a >= host.r()) throw UsageError("template verify needs 1 <= --a < r");
  const int a = o.a, b = host.r() - a;
  Template T;
  if (!o.A.empty() || !o.B.empty()) {
    T = Template{EdgeSet(a, parse_family(o.A)), EdgeSet(b, parse_family(o.B)), a, b};
  } else {
    // random matched template: shuffle, then a-blocks followed by b-blocks
    Rng rng(o.seed.value_or(0));
    std::vector<int> perm;
    for (int v = 1; v <= host.n(); ++v) perm.push_back(v);
    rng.shuffle(perm);
    const int na = o.pairs > 0 ? o.pairs : host.n() / (2 * a);
    std::vector<VertexSet> as, bs;
    int pos = 0;
    for (int i = 0; i < na && pos + a <= host.n(); ++i, pos += a) {
      VertexSet x = 0;
      for (int j = 0; j < a; ++j) x |= vertex_bit(perm[pos + j]);
      as.push_back(x);
    }
    for (; pos + b <= host.n(); pos += b) {
      VertexSet y = 0;
      for (int j = 0; j < b; ++j) y |= vertex_bit(perm[pos + j]);
      bs.push_back(y);
    }
    T = Template{EdgeSet(a, as), EdgeSet(b, bs), a, b};
  }
  const auto rep = verify_template_bound(host, T, o.s, o.t, trees_with_parts(o.s, o.t));
  if (o.json) {
    ordered_json trees = ordered_json::array();
    for (const auto& oc : rep.outcomes) trees.push_back({{"tree", tree_code(oc.tree)}, {"embedded", oc.embedding.has_value()}});
    emit(out, {{"schema", 1},
               {"command", "template verify"},
               {"A", rep.a_size},
               {"B", rep.b_size},
               {"H0", rep.h0_size},
               {"H1", rep.h1_size},
               {"bound", rep.bound},
               {"exceeded", rep.exceeded},
               {"summary", rep.summary()},
               {"trees", trees}});
  } else {
    out << "|A|: " << rep.a_size << "\n|B|: " << rep.b_size << "\n|H0|: " << rep.h0_size << "\n|H1|: " << rep.h1_size
        << "\nbound: " << rep.bound << "\nresult: " << rep.summary() << "\n";
    for (const auto& oc : rep.outcomes)
      out << "tree " << tree_code(oc.tree) << ": " << (oc.embedding ? "embedded" : "NOT embedded") << "\n";
  }
  if (!rep.exceeded) return kExitNegative;
  return rep.all_embedded() ? kExitOk : kExitIntegrity;
}

int cmd_verify_acceptance(const Options& o, std::ostream& out) {
  bool all = true;
  ordered_json list = ordered_json::array();
  run_acceptance(o.only, [&](const CriterionResult& r) {
    all = all && r.pass;
    if (o.json) {
      ordered_json j{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}};
      if (!o.no_timing) j["seconds"] = r.seconds;
      list.push_back(j);
    } else {
      out << format_criterion(r, !o.no_timing) << "\n" << std::flush;
    }
  });
  if (o.json) emit(out, {{"schema", 1}, {"command", "verify acceptance"}, {"pass", all}, {"criteria", list}});
  return all ? kExitOk : kExitNegative;
}

int cmd_verify_free(const Options& o, std::ostream& out) {
  const Hypergraph host = resolve_graph(o.host);
  std::vector<NamedPattern> pats;
  for (const auto& f : o.forbid) pats.push_back(resolve_pattern(f));
  if (pats.empty()) throw UsageError("verify free needs at least one --forbid");
  auto rep = verify_free(host, pats, SearchLimits{o.budget});
  bool unknown = false;
  ordered_json list = ordered_json::array();
  for (std::size_t i = 0; i < rep.checks.size(); ++i) {
    const auto& c = rep.checks[i];
    unknown |= c.status == SearchStatus::kBudgetExhausted;
    if (o.json) {
      ordered_json j{{"pattern", o.forbid[i]}, {"status", to_string(c.status)}};
      j["witness"] = c.witness ? embedding_json(*c.witness) : ordered_json(nullptr);
      list.push_back(j);
    } else {
      out << o.forbid[i] << ": " << to_string(c.status);
      if (c.witness) out << " " << embedding_text(*c.witness);
      out << "\n";
    }
  }
  if (o.json) emit(out, {{"schema", 1}, {"command", "verify free"}, {"free", rep.all_absent()}, {"checks", list}});
  if (rep.all_absent()) return kExitOk;
  return unknown && std::none_of(rep.checks.begin(), rep.checks.end(),
                                 [](const FreeCheck& c) { return c.status == SearchStatus::kFound; })
             ? kExitBudget
             : kExitNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Hypergraph Turan workbench", "hgx"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Machine-readable output");

  auto* construct = app.add_subcommand("construct", "Build a named family and print it");
  construct->add_option("kind", o.kind, "psi, psi1, tightpath, loosepath, abpath, c4, fano, nostability, pattern")
      ->required();
  construct->add_option("--n", o.n);
  construct->add_option("--r", o.r);
  construct->add_option("--c", o.c);
  construct->add_option("--ell", o.ell);
  construct->add_option("--a", o.a);
  construct->add_option("--b", o.b);
  construct->add_option("--spec", o.spec, "Builtin pattern for kind 'pattern'");
  construct->add_option("--seed", o.seed, "Random partition for nostability");
  construct->add_option("--out", o.out_path, "Write the family to a file");

  auto* invariants = app.add_subcommand("invariants", "tau, sigma and shadow sizes");
  invariants->add_option("input", o.input, "File or builtin name")->required();

  auto* contains_cmd = app.add_subcommand("contains", "Search the host for a copy of the pattern");
  contains_cmd->add_option("host", o.host)->required();
  contains_cmd->add_option("pattern", o.pattern)->required();
  contains_cmd->add_option("--budget", o.budget, "Node budget, 0 = unlimited");
  contains_cmd->add_flag("--blowup", o.blowup_engine, "Use the block-structured engine");

  auto* ex = app.add_subcommand("ex", "Exact Turan number by branch and bound");
  ex->add_option("--n", o.n)->required();
  ex->add_option("--r", o.r)->required();
  ex->add_option("--forbid", o.forbid, "File or builtin pattern (repeatable)");
  ex->add_flag("--all-extremal", o.all_extremal);
  ex->add_option("--budget", o.budget);
  ex->add_option("--threads", o.threads, "Defaults to HGX_THREADS, then 1");
  ex->add_option("--seed-construction", o.seed_construction, "psi, psi1, none or auto");
  ex->add_flag("--symmetry", o.symmetry, "Degree-order symmetry pruning");

  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds, or --gap for the search dashboard");
  bounds->add_option("--n", o.n)->required();
  bounds->add_option("--r", o.r)->required();
  bounds->add_option("--ell", o.ell);
  bounds->add_option("--tau", o.tau);
  bounds->add_option("--sigma", o.sigma);
  bounds->add_option("--lambda", o.lambda);
  bounds->add_option("--ex-graph", o.ex_graph, "Graph Turan value for the half-half transfer");
  bounds->add_option("--kk-m", o.kk_m, "Family size for the shadow bound");
  bounds->add_option("--kk-k", o.kk_k);
  bounds->add_flag("--gap", o.gap, "Run the search and list every applicable bound");
  bounds->add_option("--forbid", o.forbid);
  bounds->add_option("--budget", o.budget);
  bounds->add_option("--threads", o.threads);

  auto* tmpl = app.add_subcommand("template", "Template sampling and the template inequality");
  tmpl->require_subcommand(1);
  auto* sample = tmpl->add_subcommand("sample", "Heavy sets, cover L and a random template");
  sample->add_option("--host", o.host)->required();
  sample->add_option("--a", o.a)->required();
  sample->add_option("--alpha", o.alpha);
  sample->add_option("--m", o.m);
  sample->add_option("--delta", o.delta);
  sample->add_option("--s", o.s);
  sample->add_option("--seed", o.seed);
  auto* tverify = tmpl->add_subcommand("verify", "Check the inequality and grow trees");
  tverify->add_option("--host", o.host)->required();
  tverify->add_option("--a", o.a)->required();
  tverify->add_option("--s", o.s);
  tverify->add_option("--t", o.t);
  tverify->add_option("--A", o.A, "a-sets, e.g. \"1 2,3 4\"");
  tverify->add_option("--B", o.B, "b-sets, e.g. \"5,6\"");
  tverify->add_option("--pairs", o.pairs, "|A| for a random matched template");
  tverify->add_option("--seed", o.seed);

  auto* verify = app.add_subcommand("verify", "Acceptance suite and freeness checks");
  verify->require_subcommand(1);
  auto* acceptance = verify->add_subcommand("acceptance", "Run the acceptance criteria");
  acceptance->add_option("--only", o.only, "Criterion ids")->delimiter(',');
  acceptance->add_flag("--no-timing", o.no_timing);
  auto* vfree = verify->add_subcommand("free", "Check a construction against patterns");
  vfree->add_option("host", o.host)->required();
  vfree->add_option("--forbid", o.forbid)->required();
  vfree->add_option("--budget", o.budget);

  for (auto* sub : {construct, invariants, contains_cmd, ex, bounds, tmpl, sample, tverify, verify, acceptance, vfree})
    sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::stringstream buf;
    app.exit(e, buf, err);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(o, out);
    if (invariants->parsed()) return cmd_invariants(o, out);
    if (contains_cmd->parsed()) return cmd_contains(o, out);
    if (ex->parsed()) return cmd_ex(o, out);
    if (bounds->parsed()) return cmd_bounds(o, out);
    if (sample->parsed()) return cmd_template_sample(o, out);
    if (tverify->parsed()) return cmd_template_verify(o, out);
    if (acceptance->parsed()) return cmd_verify_acceptance(o, out);
    if (vfree->parsed()) return cmd_verify_free(o, out);
  } catch (const UsageError& e) {
    err << "hgx: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "hgx: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParameterError& e) {
    err << "hgx: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedSize& e) {
    err << "hgx: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IntegrityError& e) {
    err << "hgx: " << e.what() << "\n";
    return kExitIntegrity;
  }
  err << "hgx: no command\n";
  return kExitUsage;
}

}  // namespace hgx::cli
