#include "tilekit/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace tilekit {

namespace {

long long cross_degree(const Graph& g, int x, const std::vector<int>& part) {
  long long c = 0;
  for (int v : part) c += (v != x && g.has_edge(x, v)) ? 1 : 0;
  return c;
}

long long missing_between(const Graph& g, const std::vector<int>& A, const std::vector<int>& B) {
  return static_cast<long long>(A.size()) * B.size() - g.edge_count_between(A, B);
}

double gamma_at(const PartitionConstants& c, int level) {
  if (level < 1 || level > static_cast<int>(c.gammas.size()))
    throw std::invalid_argument("gamma_" + std::to_string(level) + " not configured");
  return c.gammas[level - 1];
}

}  // namespace

PropertyReport check_properties(const HPartition& p) {
  PropertyReport rep;
  const Graph& g = *p.host;
  int n = g.n();
  int h = p.h;
  int m = p.params.m;
  double beta = p.consts.beta;
  const auto& parts = p.parts;
  const auto& last = parts.back();

  rep.size_windows = true;
  if (h >= 1) {
    double gh = gamma_at(p.consts, h);
    double target = static_cast<double>(p.params.s) / p.params.r * n;
    for (int i = 0; i < h; ++i) {
      double sz = static_cast<double>(parts[i].size());
      if (sz < target - gh * n || sz > target + gh * n) rep.size_windows = false;
    }
  }

  rep.few_nonneighbors = true;
  for (int i = 0; i < h; ++i)
    for (int x : parts[i])
      if (static_cast<double>(last.size()) - cross_degree(g, x, last) > 4 * beta * n)
        rep.few_nonneighbors = false;

  rep.many_neighbors = true;
  for (int x : last)
    for (int i = 0; i < h; ++i)
      if (cross_degree(g, x, parts[i]) < beta * n) rep.many_neighbors = false;

  if (h >= m) {
    rep.last_part_dense = true;
    rep.iv_method = "vacuous";
  } else {
    double gnext = gamma_at(p.consts, h + 1);
    int k = static_cast<int>(static_cast<long long>(p.params.s) * n / p.params.r);
    if (k < 1 || k > static_cast<int>(last.size())) {
      rep.last_part_dense = true;
      rep.iv_method = "vacuous";
      rep.notes += "sparse-set size outside the last part; ";
    } else {
      auto sparse = min_edge_subset(g, last, k, Seed{0x5eed});
      rep.iv_method = sparse.exact ? "exact" : "sampled";
      rep.iv_min_edges = sparse.edges;
      rep.iv_witness = sparse.subset;
      rep.last_part_dense =
          static_cast<double>(sparse.edges) > gnext * gnext * static_cast<double>(n) * n;
    }
  }

  rep.cross_degree_third = true;
  for (int i = 0; i < h; ++i)
    for (int jj = 0; jj < h; ++jj) {
      if (i == jj) continue;
      for (int x : parts[i])
        if (3 * cross_degree(g, x, parts[jj]) < static_cast<long long>(parts[jj].size()))
          rep.cross_degree_third = false;
    }

  rep.few_missing_edges = true;
  if (h >= 1) {
    double gh = gamma_at(p.consts, h);
    for (size_t i = 0; i < parts.size(); ++i)
      for (size_t jj = i + 1; jj < parts.size(); ++jj) {
        double bound = gh * static_cast<double>(parts[i].size()) * parts[jj].size();
        if (static_cast<double>(missing_between(g, parts[i], parts[jj])) > bound)
          rep.few_missing_edges = false;
      }
  }
  return rep;
}

StarReport check_star_properties(const HPartition& p) {
  StarReport rep;
  const Graph& g = *p.host;
  int n = g.n();
  int h = p.h;
  double beta = p.consts.beta;
  const auto& parts = p.parts;
  const auto& last = parts.back();

  rep.sizes_and_sparsity = true;
  double target = static_cast<double>(p.params.s) / p.params.r * n;
  for (int i = 0; i < h; ++i) {
    double gi = gamma_at(p.consts, i + 1);
    double sz = static_cast<double>(parts[i].size());
    if (sz < target - beta * gi * n || sz > target + beta * gi * n) {
      rep.sizes_and_sparsity = false;
      rep.detail += "part " + std::to_string(i + 1) + " size off; ";
    }
    if (static_cast<double>(g.edges_inside(parts[i])) > beta * beta * gi * n * n) {
      rep.sizes_and_sparsity = false;
      rep.detail += "part " + std::to_string(i + 1) + " too dense; ";
    }
  }

  rep.few_nonneighbors = true;
  for (int i = 0; i < h; ++i)
    for (int x : parts[i])
      if (static_cast<double>(last.size()) - cross_degree(g, x, last) > 4 * beta * n)
        rep.few_nonneighbors = false;

  rep.many_neighbors = true;
  for (int x : last)
    for (int i = 0; i < h; ++i)
      if (cross_degree(g, x, parts[i]) < 2 * beta * n) rep.many_neighbors = false;
  return rep;
}

RefineOutcome refine_split(const HPartition& p, const std::vector<int>& X) {
  RefineOutcome out;
  const Graph& g = *p.host;
  int n = g.n();
  if (p.h >= p.params.m) {
    out.rejection = "already at h = m";
    return out;
  }
  auto xs = canonical_vertex_set(X, n);
  int want = static_cast<int>(static_cast<long long>(p.params.s) * n / p.params.r);
  if (xs.empty() || static_cast<int>(xs.size()) != want) {
    out.rejection = "X must have exactly floor(s*n/r) = " + std::to_string(want) + " vertices";
    return out;
  }
  const auto& last = p.parts.back();
  if (!std::includes(last.begin(), last.end(), xs.begin(), xs.end())) {
    out.rejection = "X must lie inside the last part";
    return out;
  }
  double gnext = gamma_at(p.consts, p.h + 1);
  long long ex = g.edges_inside(xs);
  if (static_cast<double>(ex) > gnext * gnext * static_cast<double>(n) * n) {
    out.rejection = "X is not sparse enough";
    return out;
  }

  std::vector<int> Y;
  std::set_difference(last.begin(), last.end(), xs.begin(), xs.end(), std::back_inserter(Y));
  double beta = p.consts.beta;

  std::vector<int> R, Xkeep;
  for (int x : xs) {
    double nonneighbors = static_cast<double>(Y.size()) - cross_degree(g, x, Y);
    (nonneighbors >= 3 * beta * n ? R : Xkeep).push_back(x);
  }
  std::vector<int> S, Ykeep;
  for (int y : Y) {
    (static_cast<double>(cross_degree(g, y, xs)) <= 3 * beta * n ? S : Ykeep).push_back(y);
  }

  std::vector<int> new_mid = Xkeep;
  new_mid.insert(new_mid.end(), S.begin(), S.end());
  std::sort(new_mid.begin(), new_mid.end());
  std::vector<int> new_last = Ykeep;
  new_last.insert(new_last.end(), R.begin(), R.end());
  std::sort(new_last.begin(), new_last.end());

  out.refined = p;
  out.refined.h = p.h + 1;
  out.refined.parts.pop_back();
  out.refined.parts.push_back(std::move(new_mid));
  out.refined.parts.push_back(std::move(new_last));
  out.post = check_star_properties(out.refined);
  out.ok = true;
  return out;
}

CleanupResult cleanup_v_vi(const HPartition& p) {
  CleanupResult res;
  res.cleaned = p;
  const Graph& g = *p.host;
  int h = p.h;
  long long step_limit = static_cast<long long>(g.n()) * g.n();

  auto total_internal = [&]() {
    long long e = 0;
    for (int i = 0; i < h; ++i) e += g.edges_inside(res.cleaned.parts[i]);
    return e;
  };
  res.internal_edge_trace.push_back(total_internal());
  if (h < 2) return res;

  while (res.shifts < step_limit) {
    bool moved = false;
    for (int i = 0; i < h && !moved; ++i) {
      auto& Ai = res.cleaned.parts[i];
      for (size_t xi = 0; xi < Ai.size() && !moved; ++xi) {
        int x = Ai[xi];
        for (int jj = 0; jj < h && !moved; ++jj) {
          if (jj == i) continue;
          auto& Aj = res.cleaned.parts[jj];
          long long deg_j = cross_degree(g, x, Aj);
          if (3 * deg_j >= static_cast<long long>(Aj.size())) continue;
          long long deg_i = cross_degree(g, x, Ai);
          if (deg_j >= deg_i) continue;  // shift must strictly drop the potential
          Ai.erase(Ai.begin() + xi);
          Aj.push_back(x);
          std::sort(Aj.begin(), Aj.end());
          ++res.shifts;
          res.internal_edge_trace.push_back(total_internal());
          moved = true;
        }
      }
    }
    if (!moved) break;
  }
  res.step_limit_hit = res.shifts >= step_limit;
  return res;
}

SparseSearchResult min_edge_subset(const Graph& g, const std::vector<int>& within, int k,
                                   const Seed& seed) {
  auto pool = canonical_vertex_set(within, g.n());
  int n = static_cast<int>(pool.size());
  if (k < 0 || k > n) throw std::invalid_argument("min_edge_subset: bad subset size");
  SparseSearchResult best;
  best.edges = -1;

  auto edges_of = [&](const std::vector<int>& set) { return g.edges_inside(set); };

  if (n <= kSparseExactCap) {
    best.exact = true;
    std::vector<int> cur;
    std::function<void(int, long long)> rec = [&](int from, long long e) {
      if (best.edges == 0 && static_cast<int>(best.subset.size()) == k) return;
      if (best.edges >= 0 && e >= best.edges) return;
      if (static_cast<int>(cur.size()) == k) {
        best.subset = cur;
        best.edges = e;
        return;
      }
      if (n - from < k - static_cast<int>(cur.size())) return;
      for (int i = from; i < n; ++i) {
        long long add = cross_degree(g, pool[i], cur);
        cur.push_back(pool[i]);
        rec(i + 1, e + add);
        cur.pop_back();
      }
    };
    rec(0, 0);
    return best;
  }

  // peeling: drop the densest vertex until k remain
  {
    std::vector<int> cur = pool;
    while (static_cast<int>(cur.size()) > k) {
      int worst = 0;
      long long worst_deg = -1;
      for (size_t i = 0; i < cur.size(); ++i) {
        long long d = cross_degree(g, cur[i], cur);
        if (d > worst_deg) {
          worst_deg = d;
          worst = static_cast<int>(i);
        }
      }
      cur.erase(cur.begin() + worst);
    }
    best.subset = cur;
    best.edges = edges_of(cur);
  }

  // seeded restarts with swap descent
  CounterRng rng(seed);
  for (int restart = 0; restart < 8; ++restart) {
    std::vector<int> cur = pool;
    rng.shuffle(cur);
    cur.resize(k);
    std::sort(cur.begin(), cur.end());
    long long e = edges_of(cur);
    bool improved = true;
    while (improved) {
      improved = false;
      for (size_t i = 0; i < cur.size() && !improved; ++i) {
        long long di = cross_degree(g, cur[i], cur);
        for (int cand : pool) {
          if (std::binary_search(cur.begin(), cur.end(), cand)) continue;
          long long dc = cross_degree(g, cand, cur) - (g.has_edge(cand, cur[i]) ? 1 : 0);
          if (dc < di) {
            cur.erase(cur.begin() + i);
            cur.insert(std::lower_bound(cur.begin(), cur.end(), cand), cand);
            e += dc - di;
            improved = true;
            break;
          }
        }
      }
    }
    if (e < best.edges) {
      best.edges = e;
      best.subset = cur;
    }
  }
  return best;
}

FindPartitionResult find_partition(const Graph& host, const RParams& params,
                                   const PartitionConstants& consts) {
  if (static_cast<int>(consts.gammas.size()) < params.m)
    throw std::invalid_argument("find_partition: need gamma_1..gamma_m configured");
  FindPartitionResult out;
  out.partition.host = &host;
  out.partition.params = params;
  out.partition.consts = consts;
  out.partition.h = 0;
  std::vector<int> all(host.n());
  std::iota(all.begin(), all.end(), 0);
  out.partition.parts = {all};

  long long min_deg = host.min_degree();
  if (min_deg * params.r < static_cast<long long>(params.r - params.s) * host.n()) {
    out.min_degree_warning = true;
    out.trace.push_back("warning: minimum degree below (1 - s/r) n");
  }

  while (out.partition.h < params.m) {
    int n = host.n();
    int k = static_cast<int>(static_cast<long long>(params.s) * n / params.r);
    const auto& last = out.partition.parts.back();
    if (k < 1 || k > static_cast<int>(last.size())) {
      out.trace.push_back("stop: sparse-set size does not fit the last part");
      break;
    }
    auto sparse = min_edge_subset(host, last, k, Seed{0xbeefULL + out.partition.h});
    double gnext = gamma_at(consts, out.partition.h + 1);
    if (static_cast<double>(sparse.edges) > gnext * gnext * static_cast<double>(n) * n) {
      out.trace.push_back("stop: no sparse witness at level " +
                          std::to_string(out.partition.h + 1) + " (min edges " +
                          std::to_string(sparse.edges) + ", " + (sparse.exact ? "exact" : "sampled") +
                          ")");
      break;
    }
    auto refined = refine_split(out.partition, sparse.subset);
    if (!refined.ok) {
      out.trace.push_back("refine rejected: " + refined.rejection);
      break;
    }
    out.partition = refined.refined;
    out.trace.push_back("refined to h = " + std::to_string(out.partition.h) +
                        (refined.post.all() ? "" : " (star properties degraded: " +
                                                       refined.post.detail + ")"));
  }

  auto cleaned = cleanup_v_vi(out.partition);
  out.partition = cleaned.cleaned;
  if (cleaned.shifts > 0)
    out.trace.push_back("cleanup applied " + std::to_string(cleaned.shifts) + " shifts");
  out.report = check_properties(out.partition);
  return out;
}

AssignmentResult distribute_leftover(const Graph& g,
                                     const std::vector<std::vector<std::vector<int>>>& tuples,
                                     const std::vector<int>& X, double d, int cap) {
  AssignmentResult res;
  int nt = static_cast<int>(tuples.size());
  auto xs = canonical_vertex_set(X, g.n());

  std::vector<std::vector<int>> good(xs.size());
  for (size_t xi = 0; xi < xs.size(); ++xi) {
    for (int ti = 0; ti < nt; ++ti) {
      int weak = 0;
      for (const auto& part : tuples[ti])
        if (static_cast<double>(cross_degree(g, xs[xi], part)) < d * part.size()) ++weak;
      if (weak <= 1) good[xi].push_back(ti);
    }
    if (good[xi].empty()) {
      res.error = "vertex " + std::to_string(xs[xi]) + " has no good tuple";
      return res;
    }
  }

  res.assignment.assign(xs.size(), -1);
  res.loads.assign(nt, 0);
  bool greedy_ok = true;
  for (size_t xi = 0; xi < xs.size(); ++xi) {
    int pick = -1;
    for (int ti : good[xi])
      if (res.loads[ti] < cap && (pick < 0 || res.loads[ti] < res.loads[pick])) pick = ti;
    if (pick < 0) {
      greedy_ok = false;
      break;
    }
    res.assignment[xi] = pick;
    res.loads[pick] += 1;
  }
  if (greedy_ok) {
    res.ok = true;
    return res;
  }

  // max-flow fallback: X-nodes unit supply, tuple capacity `cap`
  res.used_flow = true;
  res.assignment.assign(xs.size(), -1);
  res.loads.assign(nt, 0);
  std::vector<int> matched(xs.size(), -1);
  auto augment = [&](size_t start) {
    std::vector<int> prev_x(nt, -1);
    std::vector<char> seen(nt, 0);
    std::queue<size_t> bfs;
    bfs.push(start);
    std::vector<int> from_x(xs.size(), -2);
    from_x[start] = -1;
    while (!bfs.empty()) {
      size_t x = bfs.front();
      bfs.pop();
      for (int ti : good[x]) {
        if (seen[ti]) continue;
        seen[ti] = 1;
        prev_x[ti] = static_cast<int>(x);
        if (res.loads[ti] < cap) {
          // unwind the alternating path
          int t = ti;
          int xcur = static_cast<int>(x);
          while (true) {
            int old = matched[xcur];
            matched[xcur] = t;
            if (from_x[xcur] == -1) break;
            t = old;
            xcur = from_x[xcur];
          }
          res.loads[ti] += 1;
          return true;
        }
        // try to reroute one occupant of ti
        for (size_t ox = 0; ox < xs.size(); ++ox) {
          if (matched[ox] == ti && from_x[ox] == -2) {
            from_x[ox] = static_cast<int>(x);
            bfs.push(ox);
          }
        }
      }
    }
    return false;
  };
  for (size_t xi = 0; xi < xs.size(); ++xi) {
    if (!augment(xi)) {
      res.error = "no assignment under the load cap";
      return res;
    }
  }
  for (size_t xi = 0; xi < xs.size(); ++xi) res.assignment[xi] = matched[xi];
  res.ok = true;
  return res;
}

}  // namespace tilekit
