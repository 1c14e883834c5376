#include "tilekit/balance.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tilekit {

namespace {

long long sum(const std::vector<long long>& v) {
  return std::accumulate(v.begin(), v.end(), 0LL);
}

MovePlan infeasible(const std::string& lemma, const std::string& why) {
  MovePlan plan;
  plan.lemma = lemma;
  plan.feasible = false;
  plan.error = why;
  return plan;
}

void finish(MovePlan& plan, const PartSizes& sizes) {
  auto replay = apply_plan(sizes, plan);
  if (!replay.ok) {
    plan.feasible = false;
    plan.error = replay.error;
    return;
  }
  plan.post_sizes = replay.after.sizes;
  for (const auto& mv : plan.moves) plan.total_removed += sum(mv.removals);
}

// Signed remainders y_i in (-mod, mod) with sizes_i ≡ y_i and Σ y_i = 0,
// minimising Σ|y_i|: flip the largest base remainders down by `mod`.
std::vector<long long> signed_remainders(const std::vector<long long>& sizes, long long mod) {
  size_t n = sizes.size();
  std::vector<long long> base(n);
  long long total = 0;
  for (size_t i = 0; i < n; ++i) {
    base[i] = ((sizes[i] % mod) + mod) % mod;
    total += base[i];
  }
  if (total % mod != 0) throw std::invalid_argument("remainders do not balance");
  long long flips = total / mod;  // this many entries take y_i = base_i - mod
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (base[a] != base[b]) return base[a] > base[b];
    return a < b;
  });
  std::vector<long long> y = base;
  for (long long f = 0; f < flips; ++f) y[order[f]] -= mod;
  return y;
}

}  // namespace

MovePlan plan_equalize(const PartSizes& sizes, const Rat& epsilon) {
  MovePlan plan;
  plan.lemma = "equalize";
  const auto& p = sizes.params;
  int m = p.m, s = p.s, t = p.t, r = p.r;
  if (t < 1) return infeasible("equalize", "needs t >= 1 for the s:t target ratio");
  if (static_cast<int>(sizes.sizes.size()) != m + 1)
    return infeasible("equalize", "expected m+1 parts (S_1..S_m, T)");
  long long M = sum(sizes.sizes);
  if (M % r != 0) return infeasible("equalize", "total not divisible by r");
  long long target = M / r * s;  // (s/r) M

  std::vector<long long> x(m);
  for (int k = 0; k < m; ++k) {
    long long sk = sizes.sizes[k];
    if (sk > target)
      return infeasible("equalize", "S_" + std::to_string(k + 1) + " above (s/r)M");
    if (Rat(sk) < (Rat(s, r) - epsilon) * Rat(M))
      return infeasible("equalize", "S_" + std::to_string(k + 1) + " below the epsilon window");
    x[k] = target - sk;
  }

  for (int k = 0; k < m; ++k) {
    for (long long c = 0; c < x[k]; ++c) {
      BalanceMove mv;
      mv.type = "P_k";
      mv.k = k;
      mv.removals.assign(m + 1, s);
      mv.removals[k] = s - 1;
      mv.removals[m] = t + 1;
      plan.moves.push_back(std::move(mv));
    }
  }
  finish(plan, sizes);
  return plan;
}

MovePlan plan_divisibility_r(const PartSizes& sizes, const Rat& epsilon) {
  MovePlan plan;
  plan.lemma = "div-r";
  const auto& p = sizes.params;
  int m = p.m, s = p.s, t = p.t, r = p.r;
  if (static_cast<int>(sizes.sizes.size()) != m + 1)
    return infeasible("div-r", "expected m+1 parts");
  long long M = sum(sizes.sizes);
  if (M % r != 0) return infeasible("div-r", "total not divisible by r");
  for (int i = 0; i <= m; ++i) {
    Rat lo = Rat(M, m + 1) * (Rat(1) - epsilon), hi = Rat(M, m + 1) * (Rat(1) + epsilon);
    if (Rat(sizes.sizes[i]) < lo || Rat(sizes.sizes[i]) > hi)
      return infeasible("div-r", "U_" + std::to_string(i + 1) + " outside the epsilon window");
  }

  std::vector<long long> cur = sizes.sizes;
  while (true) {
    auto y = signed_remainders(cur, r);
    long long abs_sum = 0;
    for (long long v : y) abs_sum += std::llabs(v);
    plan.round_abs_remainders.push_back(abs_sum);
    if (abs_sum == 0) break;

    int jmax = 0, kmin = 0;
    for (int i = 0; i <= m; ++i) {
      if (y[i] > y[jmax]) jmax = i;
      if (y[i] < y[kmin]) kmin = i;
    }
    // round: P_{jmax,kmin} then P_i for every i != jmax
    {
      BalanceMove mv;
      mv.type = "P_jk";
      mv.j = jmax;
      mv.k = kmin;
      mv.removals.assign(m + 1, s);
      mv.removals[jmax] = t + 1;
      mv.removals[kmin] = s - 1;
      for (int i = 0; i <= m; ++i) cur[i] -= mv.removals[i];
      plan.moves.push_back(std::move(mv));
    }
    for (int i = 0; i <= m; ++i) {
      if (i == jmax) continue;
      BalanceMove mv;
      mv.type = "P_j";
      mv.j = i;
      mv.removals.assign(m + 1, s);
      mv.removals[i] = t;
      for (int q = 0; q <= m; ++q) cur[q] -= mv.removals[q];
      plan.moves.push_back(std::move(mv));
    }
    for (long long v : cur)
      if (v < 0) return infeasible("div-r", "a part went negative during planning");
  }
  finish(plan, sizes);
  return plan;
}

MovePlan plan_divisibility_s_singular(const PartSizes& sizes, const Rat& epsilon) {
  MovePlan plan;
  plan.lemma = "div-s";
  const auto& p = sizes.params;
  int m = p.m, s = p.s, r = p.r;
  if (p.t != p.s) return infeasible("div-s", "singular case needs t = s (r = (m+1)s)");
  if (static_cast<int>(sizes.sizes.size()) != m + 2)
    return infeasible("div-s", "expected m+2 parts");
  long long M = sum(sizes.sizes);
  if (M % r != 0) return infeasible("div-s", "total not divisible by r");
  for (int i = 0; i <= m + 1; ++i) {
    Rat lo = Rat(M, m + 2) * (Rat(1) - epsilon), hi = Rat(M, m + 2) * (Rat(1) + epsilon);
    if (Rat(sizes.sizes[i]) < lo || Rat(sizes.sizes[i]) > hi)
      return infeasible("div-s", "U_" + std::to_string(i + 1) + " outside the epsilon window");
  }

  std::vector<long long> cur = sizes.sizes;
  while (true) {
    auto y = signed_remainders(cur, s);
    long long abs_sum = 0;
    for (long long v : y) abs_sum += std::llabs(v);
    plan.round_abs_remainders.push_back(abs_sum);
    if (abs_sum == 0) break;

    int jmax = 0, kmin = 0;
    for (int i = 0; i <= m + 1; ++i) {
      if (y[i] > y[jmax]) jmax = i;
      if (y[i] < y[kmin]) kmin = i;
    }
    // one move changes y_jmax by -1 and y_kmin by +1 (mod s)
    BalanceMove mv;
    mv.type = "SingP_jk";
    mv.j = jmax;
    mv.k = kmin;
    mv.removals.assign(m + 2, s);
    mv.removals[jmax] = 1;
    mv.removals[kmin] = s - 1;
    for (int i = 0; i <= m + 1; ++i) cur[i] -= mv.removals[i];
    plan.moves.push_back(std::move(mv));
    for (long long v : cur)
      if (v < 0) return infeasible("div-s", "a part went negative during planning");
  }
  finish(plan, sizes);
  return plan;
}

PartitionTable plan_singular_partition(const PartSizes& sizes, const Rat& epsilon) {
  PartitionTable table;
  const auto& p = sizes.params;
  int m = p.m, s = p.s, r = p.r;
  int parts = m + 2;
  if (p.t != p.s) {
    table.feasible = false;
    table.error = "singular case needs t = s";
    return table;
  }
  if (static_cast<int>(sizes.sizes.size()) != parts) {
    table.feasible = false;
    table.error = "expected m+2 parts";
    return table;
  }
  long long M = sum(sizes.sizes);
  if (M % r != 0) {
    table.feasible = false;
    table.error = "total not divisible by r";
    return table;
  }
  for (int i = 0; i < parts; ++i) {
    if (sizes.sizes[i] % s != 0) {
      table.feasible = false;
      table.error = "U_" + std::to_string(i + 1) + " not divisible by s";
      return table;
    }
    Rat lo = Rat(M, parts) * (Rat(1) - epsilon), hi = Rat(M, parts) * (Rat(1) + epsilon);
    if (Rat(sizes.sizes[i]) < lo || Rat(sizes.sizes[i]) > hi) {
      table.feasible = false;
      table.error = "U_" + std::to_string(i + 1) + " outside the epsilon window";
      return table;
    }
  }
  table.x.resize(parts);
  for (int i = 0; i < parts; ++i) {
    table.x[i] = M / (m + 1) - sizes.sizes[i];
    if (table.x[i] < 0) {
      table.feasible = false;
      table.error = "x_" + std::to_string(i + 1) + " negative (part above M/(m+1))";
      return table;
    }
  }
  table.cell.assign(parts, std::vector<long long>(parts, 0));
  for (int i = 0; i < parts; ++i)
    for (int j = 0; j < parts; ++j)
      if (i != j) table.cell[i][j] = table.x[j];
  return table;
}

MovePlan plan_transfers(const PartSizes& totals) {
  MovePlan plan;
  plan.lemma = "transfers";
  int r = totals.params.r;
  int parts = static_cast<int>(totals.sizes.size());
  if (parts < 3) return infeasible("transfers", "need at least 3 parts for an auxiliary index");
  long long total_mod = 0;
  for (long long v : totals.sizes) total_mod = (total_mod + v) % r;
  if (total_mod != 0) return infeasible("transfers", "totals do not sum to 0 mod r");

  // Totals may be given as residues, so the plan works mod r throughout;
  // post_sizes holds residues. Applying the recorded removals to real part
  // sizes is the caller's (or apply_plan's) business.
  std::vector<long long> cur(parts);
  for (int i = 0; i < parts; ++i) cur[i] = ((totals.sizes[i] % r) + r) % r;
  while (true) {
    auto y = signed_remainders(cur, r);
    long long abs_sum = 0;
    for (long long v : y) abs_sum += std::llabs(v);
    plan.round_abs_remainders.push_back(abs_sum);
    if (abs_sum == 0) break;
    int k = 0, kp = 0;
    for (int i = 0; i < parts; ++i) {
      if (y[i] > y[k]) k = i;
      if (y[i] < y[kp]) kp = i;
    }
    int q = 0;
    while (q == k || q == kp) ++q;
    // one basic move on part k plus r-1 on part k', all through q:
    // removals are 1, r-1 and r(r-1) vertices respectively
    BalanceMove mv;
    mv.type = "Transfer";
    mv.j = k;
    mv.k = kp;
    mv.q = q;
    mv.removals.assign(parts, 0);
    mv.removals[k] = 1;
    mv.removals[kp] = r - 1;
    mv.removals[q] = static_cast<long long>(r) * (r - 1);
    for (int i = 0; i < parts; ++i) cur[i] = ((cur[i] - mv.removals[i]) % r + r) % r;
    plan.moves.push_back(std::move(mv));
  }
  plan.post_sizes = cur;
  for (const auto& mv : plan.moves) plan.total_removed += sum(mv.removals);
  return plan;
}

ApplyResult apply_plan(const PartSizes& sizes, const MovePlan& plan) {
  ApplyResult res;
  res.after = sizes;
  if (!plan.feasible) {
    res.ok = false;
    res.error = plan.error.empty() ? "plan marked infeasible" : plan.error;
    return res;
  }
  for (size_t mi = 0; mi < plan.moves.size(); ++mi) {
    const auto& mv = plan.moves[mi];
    if (mv.removals.size() != res.after.sizes.size()) {
      res.ok = false;
      res.failed_move = static_cast<int>(mi);
      res.error = "move " + std::to_string(mi) + ": removal arity mismatch";
      return res;
    }
    for (size_t i = 0; i < mv.removals.size(); ++i) {
      res.after.sizes[i] -= mv.removals[i];
      if (res.after.sizes[i] < 0) {
        res.ok = false;
        res.failed_move = static_cast<int>(mi);
        res.error = "move " + std::to_string(mi) + ": part " + std::to_string(i + 1) +
                    " oversubscribed";
        return res;
      }
    }
  }
  return res;
}

}  // namespace tilekit
