#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tilekit/graph.hpp"
#include "tilekit/rational.hpp"
#include "tilekit/rng.hpp"

namespace tilekit {

// Exact density e(X,Y) / (|X||Y|) between nonempty disjoint parts.
Rat density(const Graph& g, const std::vector<int>& X, const std::vector<int>& Y);

struct PairStats {
  Rat d;               // density of the full pair
  bool regular = false;
  std::string mode;    // "exact" or "sampled"
  // violating (X', Y', density) when irregular
  std::optional<std::tuple<std::vector<int>, std::vector<int>, Rat>> witness;
  // minimum cross-degrees, for super-regularity checks on top
  long long min_deg_x_to_y = 0, min_deg_y_to_x = 0;
};

// Verdict on: all X' ⊆ X, Y' ⊆ Y with |X'| >= eps|X|, |Y'| >= eps|Y| satisfy
// |d(X',Y') - d| < eps. Exhaustive (per-size extremal subsets) for parts of
// at most kRegularExactCap vertices; sampled and labelled beyond.
inline constexpr int kRegularExactCap = 16;

PairStats check_eps_regular(const Graph& g, const std::vector<int>& X, const std::vector<int>& Y,
                            const Rat& eps, const Rat& d,
                            const Seed& sample_seed = Seed{0});

struct SlicingOut {
  Rat eps_prime;
  Rat d_lo, d_hi;  // window for the new density
};

// eps' = max(eps/beta, 2 eps), |d' - d| <= eps. Requires 0 < eps < beta, d <= 1.
SlicingOut slicing_params(const Rat& eps, const Rat& beta, const Rat& d);

// eps' = max(xi/eps, 6 eps), |d' - d| < 3 eps. Requires 0 < xi < eps < 1.
SlicingOut slicing_adding_params(const Rat& xi, const Rat& eps, const Rat& d);

// Splits part into `pieces` groups of equal size (+-1), all of Z inside the
// first one, the rest uniform under the seeded stream.
std::vector<std::vector<int>> random_conforming_split(const std::vector<int>& part,
                                                      const std::vector<int>& Z, int pieces,
                                                      const Seed& seed);

}  // namespace tilekit
