#pragma once

#include <optional>
#include <string>

#include "tilekit/pfactor.hpp"

namespace tilekit {

// Improvement moves. Each scans the factor deterministically (pieces in
// canonical order), applies the first applicable instance in place and
// returns a short description; nullopt when nothing applies. Every applied
// move strictly increases compute_index(f) lexicographically.

// t = 0 only: s disjoint K_m pieces fuse into one Q_m.
std::optional<std::string> try_merge_to_qm(PFactor& f);

// x in a K_j piece adjacent to all of a K_h piece (j <= h <= m, h < m or
// t > 0) shifts over, producing K_{j-1} and K_{h+1}.
std::optional<std::string> try_shift_vertex(PFactor& f);

// A clique piece and a gadget trade a vertex through a fully-joined L- or
// N-set; the gadget decomposes into cliques.
std::optional<std::string> try_break_gadget(PFactor& f);

// s-t K_j pieces and (m-j)s+t K_{m+1} pieces assemble one Q_j via an
// exhaustive complete-bipartite search over compatible M/N splits.
std::optional<std::string> try_form_q_from_cliques(PFactor& f);

// s-t K_j pieces and (m-j)s+t Q_h pieces (h < j) reassemble into one Q_j,
// many K_{m+1} copies and spare K_h copies.
std::optional<std::string> try_form_q_from_gadgets(PFactor& f);

// A K_{j+1} among high-deficiency gadget vertices swaps in clique vertices
// along a matching and comes free as a new piece. j is the least index with
// |A_j| >= c_cap / m; inapplicable while the small cliques fit under c_cap.
std::optional<std::string> try_matching_swap(PFactor& f, long long c_cap);

// Pieces per side considered by the biclique searches; keeps them exhaustive
// at a bounded cost.
inline constexpr int kBicliqueSideCap = 40;

}  // namespace tilekit
