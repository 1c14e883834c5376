#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tilekit/graph.hpp"
#include "tilekit/params.hpp"
#include "tilekit/rational.hpp"

namespace tilekit {

// A graph with a nonnegative exact rational weight on every vertex.
struct WeightedGraph {
  Graph graph;
  std::vector<Rat> weights;

  Rat total_weight() const;
};

// Complete graph on m+1 vertices: m vertices of weight s/r and one (the last)
// of weight t/r; total weight 1. The weight-0 vertex is kept when t = 0.
WeightedGraph build_T(const RParams& params);

// Multiplies every vertex weight by phi, exactly. Requires phi > 0.
WeightedGraph scale(const WeightedGraph& w, const Rat& phi);

// A placed weighted piece: injective vertex map into the host.
struct PackingPiece {
  WeightedGraph pattern;
  std::vector<int> map;  // map[i] = host vertex of pattern vertex i
};

struct PackingCert {
  Graph host;
  std::vector<PackingPiece> pieces;
};

// Per-host-vertex accumulated weight of all pieces.
std::vector<Rat> accumulated_weights(const PackingCert& cert);

// |V(host)| minus the total placed weight.
Rat residue(const PackingCert& cert);

enum class PackingMode { Packing, Factor };

struct VerifyReport {
  bool ok = false;
  std::string message;
  int vertex = -1;                  // first offending host vertex, when any
  std::pair<int, int> edge{-1, -1};  // first unpreserved piece edge (host labels)
};

// Checks injectivity, edge preservation and the per-vertex weight bound
// (<= 1 for Packing, == 1 for Factor). Exact arithmetic; reports, never throws.
VerifyReport verify_packing(const PackingCert& cert, PackingMode mode);

// m+1 copies of T on K_{m+1} with pairwise distinct images of the light vertex.
PackingCert t_factor_of_clique(const RParams& params);

PackingCert scale_cert(const PackingCert& cert, const Rat& phi);

std::string cert_to_json(const PackingCert& cert);
PackingCert cert_from_json(const std::string& text);

}  // namespace tilekit
