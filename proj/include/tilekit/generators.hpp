#pragma once

#include <vector>

#include "tilekit/graph.hpp"
#include "tilekit/rational.hpp"
#include "tilekit/rng.hpp"

namespace tilekit {

// G(n,p): each unordered pair present independently with probability p under
// the seeded counter stream. Deterministic given (n, p, seed).
Graph gen_gnp(int n, const Rat& p, const Seed& seed);

// Independent set A of size (1-alpha)*n plus all other pairs. Requires
// (1-alpha)*n integral; the minimum degree is then exactly alpha*n.
Graph gen_extremal_host(int n, const Rat& alpha);

// Vertices of the set A = {0, ..., (1-alpha)n - 1} in the extremal host.
std::vector<int> extremal_host_independent_part(int n, const Rat& alpha);

Graph gen_complete_multipartite(const std::vector<int>& class_sizes);

Graph gen_empty(int n);
Graph gen_complete(int n);

}  // namespace tilekit
