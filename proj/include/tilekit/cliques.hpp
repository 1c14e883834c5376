#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tilekit/graph.hpp"

namespace tilekit {

// All k-cliques of g, in lexicographic vertex order. Restricted to `within`
// when given; stops after `limit` cliques when given. Exhaustive otherwise.
std::vector<std::vector<int>> enumerate_cliques(const Graph& g, int k,
                                                const std::vector<int>* within = nullptr,
                                                long long limit = -1);

// First K_s inside S (lexicographic), or nullopt after exhaustive search.
std::optional<std::vector<int>> find_clique_in_subset(const Graph& g, const std::vector<int>& S,
                                                      int s);

// First member of the family that induces K_s, or nullopt.
std::optional<std::vector<int>> find_clique_in_family(const Graph& g,
                                                      const std::vector<std::vector<int>>& family,
                                                      int s);

// Exact maximum independent set, branch and bound with a greedy colouring
// bound on the complement. Intended for n <= ~40.
std::vector<int> max_independent_set(const Graph& g);

}  // namespace tilekit
