#pragma once

#include <string>
#include <string_view>

#include "hgx/bipartite.hpp"
#include "hgx/hypergraph.hpp"

namespace hgx {

// Text format: optional '#' comment lines, a header "n r m", then m lines of
// r strictly increasing 1-based labels separated by single spaces. LF line
// endings, ASCII only. Bipartite graphs use "s t m" followed by "u v" lines.

Hypergraph parse_hypergraph(std::string_view text);
std::string serialize_hypergraph(const Hypergraph& h);

BipartiteGraph parse_bipartite(std::string_view text);
std::string serialize_bipartite(const BipartiteGraph& g);

Hypergraph read_hypergraph_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace hgx
