#pragma once

#include <string>
#include <vector>

#include "tilekit/moves.hpp"
#include "tilekit/pfactor.hpp"

namespace tilekit {

struct MoveRecord {
  std::string move;
  std::string detail;
  IndexVector before, after;
  int pieces_before = 0, pieces_after = 0;
};

struct EngineConfig {
  double beta = 0.05;       // density diagnostics in the stage report
  long long c_cap = -1;     // -1: min(max(r^4, 50), n/2)
  long long step_limit = -1;  // -1: (2m+1) n^2
  std::vector<std::string> move_order = {
      "merge_to_qm",        "shift_vertex",       "break_gadget",
      "form_q_from_cliques", "form_q_from_gadgets", "matching_swap"};
  bool validate_each_step = false;  // re-validate the factor after every move
};

long long default_c_cap(const RParams& params, int n);
long long default_step_limit(const RParams& params, int n);

struct LocalSearchResult {
  PFactor factor;
  std::vector<MoveRecord> trace;
  bool step_limit_hit = false;
};

// First-applicable move in the configured order, repeated until fixpoint.
// Every recorded step strictly increases the index.
LocalSearchResult run_local_search(const Graph& host, const RParams& params,
                                   const EngineConfig& config = {});

struct StageReport {
  int j = -1;  // least clique order carrying >= c_cap/m vertices
  std::vector<long long> clique_vertices;  // |A_i| for i in [m+1]
  std::vector<long long> gadget_counts;    // q_h for h in [m]
  long long w_size = 0, z_size = 0;
  long long independent_target = 0;  // (s/r - gamma) n, reported not asserted
  std::string notes;
};

struct Dichotomy {
  enum class Kind { Cover, IndependentSet, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::vector<int> leftover;         // Cover: vertices in K_1..K_m pieces
  std::vector<int> independent_set;  // IndependentSet: verified independent
  StageReport report;
  LocalSearchResult search;
};

// Saturate the local search, then either certify the near-cover (small-clique
// mass at most c_cap) or extract a validity-checked independent set from the
// deficiency graph of the final factor.
Dichotomy run_dichotomy(const Graph& host, const RParams& params, double gamma, long long c_cap,
                        const EngineConfig& config = {});

std::string trace_to_json(const RParams& params, const LocalSearchResult& result);
std::string dichotomy_to_json(const Dichotomy& d);

}  // namespace tilekit
