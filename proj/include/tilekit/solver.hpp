#pragma once

#include <optional>
#include <vector>

#include "tilekit/graph.hpp"

namespace tilekit {

enum class SolveMode { Decide, Find, Maximize };

// Exact-cover search instance: tile the host with copies of K_r (or of an
// explicit piece graph, <= 12 vertices, subgraph embeddings). A clique may
// contain at most one vertex of Z.
struct FactorInstance {
  const Graph* host = nullptr;
  int r = 0;                       // clique size; ignored when piece is set
  std::optional<Graph> piece;
  std::vector<int> Z;
  SolveMode mode = SolveMode::Find;
};

enum class SolveStatus { Found, None, Timeout };

struct FactorResult {
  SolveStatus status = SolveStatus::None;
  std::vector<std::vector<int>> cliques;  // certificate, or best partial on timeout
  int covered = 0;
  long long nodes = 0;
  bool optimal = true;  // Maximize: false when the node budget cut the proof
};

// Node-count budget keeps timeouts deterministic.
inline constexpr long long kDefaultNodeBudget = 10'000'000;

FactorResult solve_factor(const FactorInstance& inst, long long node_budget = kDefaultNodeBudget);

// Largest vertex count coverable by disjoint K_r copies; branch and bound
// seeded with a greedy cover.
FactorResult max_partial_factor(const Graph& host, int r,
                                long long node_budget = kDefaultNodeBudget);

// Validates a certificate against the instance: disjoint, piece-inducing,
// conforming; full coverage in Decide/Find.
bool validate_factor_result(const FactorInstance& inst, const FactorResult& res);

struct GreedyConformingResult {
  bool ok = false;
  std::vector<std::vector<int>> cliques;  // each K_{s+1}, at most one Z-vertex
  int failed_at = -1;                     // Z-vertex where extension failed, -1 for fill phase
};

// K_{s+1} copies around the vertices of Z in order (one Z-vertex each), then
// Z-free copies until `target` cliques exist. Reports the failure point
// instead of throwing: at this scale the hypothesis may simply not hold.
GreedyConformingResult greedy_conforming_collection(const Graph& g, const std::vector<int>& Z,
                                                    int s, int target,
                                                    const std::vector<int>& forbidden = {});

// q copies of K_s, exactly two sharing exactly one vertex, the rest disjoint;
// qs-1 vertices total. Exhaustive at small scale (host cap 40 vertices).
std::optional<std::vector<std::vector<int>>> find_Fq(const Graph& g, int s, int q,
                                                     const std::vector<int>* within = nullptr);

// K_s inside common-neighborhood(K) ∩ part \ avoid; K ∪ result spans a clique.
std::optional<std::vector<int>> extend_clique_into_part(const Graph& g, const std::vector<int>& K,
                                                        const std::vector<int>& part, int s,
                                                        const std::vector<int>& avoid = {});

}  // namespace tilekit
