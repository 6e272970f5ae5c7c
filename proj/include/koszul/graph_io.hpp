#pragma once

#include <string>
#include <string_view>

#include "koszul/graph.hpp"

namespace koszul {

/// Parses either {"n": int, "edges": [[i,j],...]} or the edge-list form
/// ("n <count>" header, then one "i j" per line; '#' starts a comment).
/// The format is picked from the first non-whitespace byte. Throws ParseError.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

/// Compact JSON form, e.g. {"edges":[[1,2]],"n":2}.
std::string graph_to_json(const Graph& g);
std::string graph_to_edge_list(const Graph& g);

}  // namespace koszul
