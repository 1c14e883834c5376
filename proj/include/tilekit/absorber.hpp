#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tilekit/graph.hpp"
#include "tilekit/params.hpp"
#include "tilekit/rational.hpp"
#include "tilekit/rng.hpp"

namespace tilekit {

// K is good for v when v misses at most 2 of its vertices.
bool is_good(const Graph& g, const std::vector<int>& K, int v);

// One global list of candidate cliques, filtered per vertex pair on the fly;
// per-pair families are never materialised.
struct PairFamilies {
  int clique_size = 0;
  bool exhaustive = true;
  std::vector<std::vector<int>> cliques;

  // indices of cliques good for both u and v (excluding cliques containing them)
  template <class F>
  void for_each_good(const Graph& g, int u, int v, F f) const {
    for (size_t i = 0; i < cliques.size(); ++i) {
      const auto& K = cliques[i];
      if (std::binary_search(K.begin(), K.end(), u) || std::binary_search(K.begin(), K.end(), v))
        continue;
      if (is_good(g, K, u) && is_good(g, K, v)) f(i);
    }
  }

  long long count_good(const Graph& g, int u, int v) const;
  std::vector<std::pair<int, int>> empty_pairs(const Graph& g) const;
};

inline constexpr int kFamilyExactCap = 30;

// All K_{m+k} cliques for k in {1,2}; exhaustive up to kFamilyExactCap host
// vertices, seeded sampling beyond (labelled via `exhaustive`).
PairFamilies build_pair_families(const Graph& g, const RParams& params, int k,
                                 const Seed& seed = Seed{1}, long long sample_budget = 200000);

struct AbsorberConfig {
  Rat xi = Rat(1, 10);
  long long target = -1;        // -1: ceil(xi^2 n / 50)
  int max_retries = 5;
  std::optional<double> sample_prob;  // overrides (xi/10) n^{1-G}
  double delta2 = 0.05;          // coverage certificate bound 10(k+m) delta2 n
};

struct AbsorberResult {
  bool ok = false;
  std::vector<std::vector<int>> cliques;  // pairwise disjoint
  std::map<std::pair<int, int>, long long> pair_counts;
  long long min_count = 0;
  std::pair<int, int> min_pair{-1, -1};
  int retries_used = 0;
  bool coverage_certified = false;
  std::string note;
};

// Seeded sampling of the family union, greedy pruning to disjointness, and an
// honest per-pair recount against the target; retries derive fresh streams.
AbsorberResult sample_absorber(const Graph& g, const PairFamilies& families,
                               const AbsorberConfig& config, const Seed& seed);

// Least common-neighborhood size over all vertex subsets of size up to m.
long long min_common_neighborhood(const Graph& g, int m);

}  // namespace tilekit
