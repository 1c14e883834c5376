#pragma once

#include "tilekit/graph.hpp"
#include "tilekit/rational.hpp"

namespace tilekit {

// Exact colouring search. Capped at kColoringCap vertices; larger graphs are a
// size error (the sweep is exponential).
inline constexpr int kColoringCap = 20;

bool is_k_colorable(const Graph& g, int k);
int chromatic_number(const Graph& g);

struct CriticalChromatic {
  int chi = 0;
  int t_min = 0;   // smallest colour-class size over all proper chi-colourings
  Rat s_value;     // (|V| - t_min) / (chi - 1), not necessarily integral
  Rat chi_cr;      // |V| / s_value
};

// Requires at least one edge (chi >= 2) and |V| <= kColoringCap.
CriticalChromatic critical_chromatic(const Graph& g);

}  // namespace tilekit
