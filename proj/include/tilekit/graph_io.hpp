#pragma once

#include <string>

#include "tilekit/graph.hpp"

namespace tilekit {

// {"n": int, "edges": [[u,v], ...]} with u < v. The reader rejects self-loops,
// duplicates and unsorted pairs.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

Graph load_graph_file(const std::string& path);
void save_graph_file(const Graph& g, const std::string& path);

}  // namespace tilekit
