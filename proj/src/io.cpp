#include "hgx/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "hgx/error.hpp"

namespace hgx {
namespace {

struct Line {
  int number;
  std::string_view text;
};

// Split on LF, dropping comment lines. A final newline does not produce an
// extra empty line.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    ++number;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.front() == '#') continue;
    out.push_back({number, line});
  }
  return out;
}

std::vector<long long> parse_fields(const Line& line) {
  std::vector<long long> out;
  std::string_view s = line.text;
  if (s.empty()) throw ParseError(line.number, "empty line");
  std::size_t pos = 0;
  while (true) {
    std::size_t end = s.find(' ', pos);
    if (end == std::string_view::npos) end = s.size();
    std::string_view tok = s.substr(pos, end - pos);
    if (tok.empty()) throw ParseError(line.number, "fields must be separated by single spaces");
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError(line.number, "not an integer: '" + std::string(tok) + "'");
    out.push_back(value);
    if (end == s.size()) break;
    pos = end + 1;
  }
  return out;
}

std::vector<long long> parse_header(const std::vector<Line>& lines, const char* shape) {
  if (lines.empty()) throw ParseError(1, std::string("missing header '") + shape + "'");
  auto header = parse_fields(lines.front());
  if (header.size() != 3) throw ParseError(lines.front().number, std::string("header must be '") + shape + "'");
  for (long long x : header)
    if (x < 0) throw ParseError(lines.front().number, "header values must be non-negative");
  if (static_cast<long long>(lines.size()) - 1 != header[2])
    throw ParseError(lines.empty() ? 1 : lines.back().number,
                     "header announces " + std::to_string(header[2]) + " edges but " +
                         std::to_string(lines.size() - 1) + " edge lines follow");
  return header;
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  auto lines = content_lines(text);
  auto header = parse_header(lines, "n r m");
  const long long n = header[0], r = header[1];
  if (r < 1 || n < r) throw ParseError(lines.front().number, "need n >= r >= 1");
  if (n > kMaxVertices) throw ParseError(lines.front().number, "at most 64 vertices are supported");
  std::vector<VertexSet> edges;
  std::unordered_set<VertexSet> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    auto f = parse_fields(line);
    if (static_cast<long long>(f.size()) != r)
      throw ParseError(line.number, "edge has " + std::to_string(f.size()) + " vertices, expected " + std::to_string(r));
    VertexSet e = 0;
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (f[j] < 1 || f[j] > n) throw ParseError(line.number, "vertex " + std::to_string(f[j]) + " out of range");
      if (j > 0 && f[j] == f[j - 1]) throw ParseError(line.number, "duplicate vertex " + std::to_string(f[j]));
      if (j > 0 && f[j] < f[j - 1]) throw ParseError(line.number, "vertex labels must be strictly increasing");
      e |= vertex_bit(static_cast<int>(f[j]));
    }
    if (!seen.insert(e).second) throw ParseError(line.number, "duplicate edge " + set_to_string(e));
    edges.push_back(e);
  }
  return Hypergraph(static_cast<int>(n), static_cast<int>(r), std::move(edges));
}

std::string serialize_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  out << h.n() << ' ' << h.r() << ' ' << h.size() << '\n';
  for (VertexSet e : h.edges()) {
    bool first = true;
    for (int v : to_vertices(e)) {
      if (!first) out << ' ';
      out << v;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

BipartiteGraph parse_bipartite(std::string_view text) {
  auto lines = content_lines(text);
  auto header = parse_header(lines, "s t m");
  const long long s = header[0], t = header[1];
  std::vector<BipartiteGraph::Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    auto f = parse_fields(line);
    if (f.size() != 2) throw ParseError(line.number, "bipartite edge must be 'u v'");
    if (f[0] < 1 || f[0] > s) throw ParseError(line.number, "U-vertex " + std::to_string(f[0]) + " out of range");
    if (f[1] < 1 || f[1] > t) throw ParseError(line.number, "V-vertex " + std::to_string(f[1]) + " out of range");
    BipartiteGraph::Edge e{static_cast<int>(f[0]), static_cast<int>(f[1])};
    for (const auto& prev : edges)
      if (prev == e) throw ParseError(line.number, "duplicate edge");
    edges.push_back(e);
  }
  return BipartiteGraph(static_cast<int>(s), static_cast<int>(t), std::move(edges));
}

std::string serialize_bipartite(const BipartiteGraph& g) { return to_text(g); }

Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_hypergraph(buf.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError("cannot write " + path);
  out << text;
}

}  // namespace hgx
