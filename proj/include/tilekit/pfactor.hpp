#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tilekit/graph.hpp"
#include "tilekit/params.hpp"

namespace tilekit {

// A placed piece of a P-factor: either a clique K_i (1 <= i <= m+1) or a
// gadget Q_h (1 <= h <= m) with its L/M/N structure retained. Placements are
// required-subgraph: the host must carry the piece's edges and may carry more.
struct PlacedPiece {
  enum class Kind { Clique, Gadget };
  Kind kind = Kind::Clique;
  int order = 1;  // i for K_i, h for Q_h
  std::vector<int> verts;
  std::vector<std::vector<int>> L, M, N;  // gadgets only

  static PlacedPiece clique(std::vector<int> verts);
  static PlacedPiece gadget(int h, std::vector<std::vector<int>> L, std::vector<std::vector<int>> M,
                            std::vector<std::vector<int>> N);
};

// Vertex-disjoint pieces covering all of the host.
struct PFactor {
  const Graph* host = nullptr;
  RParams params;
  std::vector<PlacedPiece> pieces;
};

// Lexicographic potential (phi_{m+1}, phi_m, q_m, ..., phi_1, q_1) with
// phi_h = k_h + (s-t) q_h and phi_{m+1} = k_{m+1} + sum_h ((m-h)s+t) q_h.
using IndexVector = std::vector<long long>;

PFactor init_trivial(const Graph& host, const RParams& params);
IndexVector compute_index(const PFactor& f);
std::string index_str(const IndexVector& ix);

// k_i for i in [m+1] (index 0 unused) and q_h for h in [m].
struct PieceCounts {
  std::vector<long long> k, q;
};
PieceCounts piece_counts(const PFactor& f);

// nullopt when valid, otherwise the first violated condition.
std::optional<std::string> validate_pfactor(const PFactor& f);

// Stable canonical order so move scans are deterministic.
void normalize_pieces(PFactor& f);

}  // namespace tilekit
