#include "koszul/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

Graph build(int n, std::vector<Edge> edges) {
  try {
    return Graph(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid graph: ") + e.what());
  }
}

Graph parse_json_graph(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("graph JSON needs an integer field \"n\"");
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw ParseError("each edge must be a pair of integers");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  return build(j["n"].get<int>(), std::move(edges));
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::vector<Edge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (n < 0) {
      if (first != "n" || !(ls >> n)) throw ParseError("edge list must start with \"n <count>\"");
    } else {
      int i = 0, j = 0;
      std::istringstream fs(first);
      if (!(fs >> i) || !(ls >> j))
        throw ParseError("line " + std::to_string(lineno) + ": expected \"i j\"");
      edges.emplace_back(i, j);
    }
    std::string rest;
    if (ls >> rest) throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
  }
  if (n < 0) throw ParseError("empty graph file");
  return build(n, std::move(edges));
}

}  // namespace

Graph parse_graph(std::string_view text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos == std::string_view::npos) throw ParseError("empty graph text");
  return text[pos] == '{' ? parse_json_graph(text) : parse_edge_list(text);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_graph(ss.str());
}

std::string graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.vertex_count();
  j["edges"] = nlohmann::json::array();
  for (auto [a, b] : g.edges()) j["edges"].push_back({a, b});
  return j.dump();
}

std::string graph_to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << '\n';
  for (auto [a, b] : g.edges()) out << a << ' ' << b << '\n';
  return out.str();
}

}  // namespace koszul
