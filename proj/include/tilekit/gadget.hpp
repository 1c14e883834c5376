#pragma once

#include <vector>

#include "tilekit/graph.hpp"
#include "tilekit/params.hpp"
#include "tilekit/rational.hpp"
#include "tilekit/weighted.hpp"

namespace tilekit {

// The gadget on (m+1-h)*r vertices: L-sets (h-cliques, s-t of them), M-sets
// ((m-h+1)-cliques) and N-sets (h-cliques), (m-h)s+t of each, with complete
// bipartite L_i<->M_j for all i,j and M_j<->N_j for matching j only.
struct QGadget {
  RParams params;
  int h = 0;
  Graph graph;
  std::vector<std::vector<int>> L, M, N;
};

QGadget build_Q(const RParams& params, int h);

// Exact scale that lets the gadget carry a perfect fractional T-cover:
// r / (s*(m-h+1)*(s-t)*((m-h)s+t)); 1 in the degenerate t=0, h=m case.
Rat q_h_constant(const RParams& params, int h);

// Explicit certificate: scaled copies of T covering build_Q(params, h) with
// accumulated weight exactly 1 at every vertex.
PackingCert factor_Q_with_T(const RParams& params, int h);

// lcm of the denominators of q_1..q_m (and 1).
Int common_denominator_b(const RParams& params);

// Certificate for a disjoint collection of K_{m+1} copies and Q_h copies,
// covered by copies of (1/b) * T. gadget_counts[h-1] = number of Q_h copies.
PackingCert one_over_b_factor(const RParams& params, const std::vector<int>& gadget_counts,
                              int clique_count);

// Complete multipartite graph with m classes of size m*s and one of size m*t
// (dropped when t = 0). Requires r = m*s + t with 0 <= t < s.
Graph gen_bottle(int m, int r, int t);

}  // namespace tilekit
