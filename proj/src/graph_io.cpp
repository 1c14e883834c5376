#include "tilekit/graph_io.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace tilekit {

using nlohmann::json;

std::string graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.n();
  json edges = json::array();
  for (int u = 0; u < g.n(); ++u)
    for (int v : g.neighbors(u))
      if (v > u) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j.dump();
}

Graph graph_from_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("graph json: missing integer field 'n'");
  int n = j["n"].get<int>();
  Graph g(n);
  std::set<std::pair<int, int>> seen;
  for (const auto& e : j.value("edges", json::array())) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("graph json: edge entries must be pairs");
    int u = e[0].get<int>();
    int v = e[1].get<int>();
    if (u == v) throw std::invalid_argument("graph json: self-loop at " + std::to_string(u));
    if (u > v) throw std::invalid_argument("graph json: edges must satisfy u < v");
    if (!seen.insert({u, v}).second)
      throw std::invalid_argument("graph json: duplicate edge [" + std::to_string(u) + "," +
                                  std::to_string(v) + "]");
    g.add_edge(u, v);
  }
  return g;
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return graph_from_json(text);
}

void save_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << graph_to_json(g) << "\n";
}

}  // namespace tilekit
