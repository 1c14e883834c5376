#pragma once

#include <string>
#include <vector>

#include "tilekit/params.hpp"
#include "tilekit/rational.hpp"

namespace tilekit {

// The planners are pure integer arithmetic on part sizes; picking which
// vertices realise a removed clique is the factor solver's job.
struct PartSizes {
  std::vector<long long> sizes;
  RParams params;
};

struct BalanceMove {
  std::string type;  // "P_k", "P_j", "P_jk", "SingP_jk", "Transfer"
  int j = -1, k = -1, q = -1;
  std::vector<long long> removals;  // per part, aligned with PartSizes
};

struct MovePlan {
  std::string lemma;
  bool feasible = true;
  std::string error;  // names the failing part when infeasible
  std::vector<BalanceMove> moves;
  std::vector<long long> post_sizes;
  long long total_removed = 0;
  // per-round signed remainder bookkeeping, for the divisibility planners
  std::vector<long long> round_abs_remainders;
};

// Parts (S_1..S_m, T): P_k moves drive all S_i to (s/r)M and the ratio
// |S_i| : |T| to s : t. Every move removes exactly r vertices.
MovePlan plan_equalize(const PartSizes& sizes, const Rat& epsilon);

// Parts (U_1..U_{m+1}): P_j / P_{j,k} rounds make every size divisible by r.
MovePlan plan_divisibility_r(const PartSizes& sizes, const Rat& epsilon);

// Singular case r = (m+1)s, parts (U_1..U_{m+2}): sizes driven divisible by s.
MovePlan plan_divisibility_s_singular(const PartSizes& sizes, const Rat& epsilon);

struct PartitionTable {
  bool feasible = true;
  std::string error;
  std::vector<long long> x;                 // column sizes
  std::vector<std::vector<long long>> cell;  // cell[i][j] = |P_{i,j}|, 0 on the diagonal
};

// Singular case: split each U_i into parts of sizes x_j (j != i), all
// divisible by s, with equal column sizes.
PartitionTable plan_singular_partition(const PartSizes& sizes, const Rat& epsilon);

// Transfers drive every part total to 0 mod r. Each transfer moves one unit
// (mod r) from part k to part k' through an untouched auxiliary part q.
MovePlan plan_transfers(const PartSizes& totals);

struct ApplyResult {
  bool ok = true;
  PartSizes after;
  std::string error;
  int failed_move = -1;
};

// Replays a plan move by move; fails on any intermediate negative size.
ApplyResult apply_plan(const PartSizes& sizes, const MovePlan& plan);

}  // namespace tilekit
