#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tilekit/graph.hpp"
#include "tilekit/params.hpp"
#include "tilekit/rng.hpp"

namespace tilekit {

struct PartitionConstants {
  double beta = 0.05;
  std::vector<double> gammas;  // gamma_1..gamma_m, one per refinement level
};

struct HPartition {
  const Graph* host = nullptr;
  RParams params;  // variant B
  int h = 0;
  std::vector<std::vector<int>> parts;  // h+1 parts, A_1..A_{h+1}
  PartitionConstants consts;
};

// Final-form properties of a partition. (iv) is exact only for small hosts;
// the report records which method produced the verdict.
struct PropertyReport {
  bool size_windows = false;        // (i)
  bool few_nonneighbors = false;    // (ii)
  bool many_neighbors = false;      // (iii)
  bool last_part_dense = false;     // (iv), vacuous at h = m
  bool cross_degree_third = false;  // (v)
  bool few_missing_edges = false;   // (vi)
  std::string iv_method;            // "exact", "sampled" or "vacuous"
  long long iv_min_edges = -1;
  std::vector<int> iv_witness;
  std::string notes;

  bool all() const {
    return size_windows && few_nonneighbors && many_neighbors && last_part_dense &&
           cross_degree_third && few_missing_edges;
  }
};

PropertyReport check_properties(const HPartition& p);

// The invariant kept while refining: tighter size/edge windows on A_1..A_h,
// plus the non-neighbor and neighbor bounds.
struct StarReport {
  bool sizes_and_sparsity = false;  // (i*)
  bool few_nonneighbors = false;    // (ii*)
  bool many_neighbors = false;      // (iii*)
  std::string detail;
  bool all() const { return sizes_and_sparsity && few_nonneighbors && many_neighbors; }
};

StarReport check_star_properties(const HPartition& p);

struct RefineOutcome {
  bool ok = false;
  HPartition refined;
  std::string rejection;
  StarReport post;
};

// Splits A_{h+1} along a sparse set X via the swap sets R (X-vertices with
// many non-neighbors outside) and S (outside vertices with few neighbors
// in X); the new parts are (X \ R) ∪ S and the rest.
RefineOutcome refine_split(const HPartition& p, const std::vector<int>& X);

struct CleanupResult {
  HPartition cleaned;
  int shifts = 0;
  bool step_limit_hit = false;
  std::vector<long long> internal_edge_trace;  // sum over parts, non-increasing
};

// Single-vertex shifts between A_1..A_h, each strictly decreasing the total
// internal edge count; the integer potential forces termination.
CleanupResult cleanup_v_vi(const HPartition& p);

struct SparseSearchResult {
  std::vector<int> subset;
  long long edges = 0;
  bool exact = false;
};

// Minimum-edge k-subset of `within`: exhaustive when the pool is small,
// peeling plus seeded local search beyond (labelled).
inline constexpr int kSparseExactCap = 18;
SparseSearchResult min_edge_subset(const Graph& g, const std::vector<int>& within, int k,
                                   const Seed& seed);

struct FindPartitionResult {
  HPartition partition;
  PropertyReport report;
  std::vector<std::string> trace;
  bool min_degree_warning = false;
};

// Start at the trivial single part, refine along sparse witnesses while they
// exist (at most m times), then clean up; the final report is honest about
// which properties actually hold at this n.
FindPartitionResult find_partition(const Graph& host, const RParams& params,
                                   const PartitionConstants& consts);

struct AssignmentResult {
  bool ok = false;
  std::vector<int> assignment;  // per leftover vertex, a tuple index
  std::vector<int> loads;
  bool used_flow = false;
  std::string error;
};

// Spreads leftover vertices over part-tuples they are good for (at most one
// weak coordinate), round-robin with a per-tuple cap and a max-flow fallback.
AssignmentResult distribute_leftover(const Graph& g,
                                     const std::vector<std::vector<std::vector<int>>>& tuples,
                                     const std::vector<int>& X, double d, int cap);

}  // namespace tilekit
