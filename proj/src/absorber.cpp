#include "tilekit/absorber.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

#include "tilekit/cliques.hpp"

namespace tilekit {

bool is_good(const Graph& g, const std::vector<int>& K, int v) {
  auto k = canonical_vertex_set(K, g.n());
  if (!g.is_clique(k)) throw std::invalid_argument("is_good: K is not a clique");
  if (std::binary_search(k.begin(), k.end(), v))
    throw std::invalid_argument("is_good: v lies inside K");
  long long deg = 0;
  for (int u : k) deg += g.has_edge(u, v) ? 1 : 0;
  return deg >= static_cast<long long>(k.size()) - 2;
}

long long PairFamilies::count_good(const Graph& g, int u, int v) const {
  long long c = 0;
  for_each_good(g, u, v, [&](size_t) { ++c; });
  return c;
}

std::vector<std::pair<int, int>> PairFamilies::empty_pairs(const Graph& g) const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (count_good(g, u, v) == 0) out.push_back({u, v});
  return out;
}

PairFamilies build_pair_families(const Graph& g, const RParams& params, int k, const Seed& seed,
                                 long long sample_budget) {
  if (params.variant != Variant::B)
    throw std::invalid_argument("build_pair_families: variant B required");
  if (k != 1 && k != 2) throw std::invalid_argument("build_pair_families: k must be 1 or 2");
  PairFamilies fam;
  fam.clique_size = params.m + k;
  if (g.n() <= kFamilyExactCap) {
    fam.exhaustive = true;
    fam.cliques = enumerate_cliques(g, fam.clique_size);
    return fam;
  }
  // sampled candidates: random subsets kept when they span cliques
  fam.exhaustive = false;
  CounterRng rng(seed);
  std::set<std::vector<int>> found;
  for (long long it = 0; it < sample_budget; ++it) {
    std::vector<int> pick;
    std::set<int> used;
    while (static_cast<int>(pick.size()) < fam.clique_size) {
      int v = static_cast<int>(rng.next_below(g.n()));
      if (used.insert(v).second) pick.push_back(v);
    }
    std::sort(pick.begin(), pick.end());
    if (g.is_clique(pick)) found.insert(pick);
  }
  fam.cliques.assign(found.begin(), found.end());
  return fam;
}

AbsorberResult sample_absorber(const Graph& g, const PairFamilies& families,
                               const AbsorberConfig& config, const Seed& seed) {
  AbsorberResult res;
  if (families.cliques.empty()) {
    res.note = "no candidate cliques";
    return res;
  }
  int n = g.n();
  int G = families.clique_size;
  long long target = config.target;
  if (target < 0) {
    Rat t = config.xi * config.xi * Rat(n, 50);
    target = rat_num(t).convert_to<long long>() / rat_den(t).convert_to<long long>();
    if (Rat(target) < t) ++target;
  }
  double prob = config.sample_prob
                    ? *config.sample_prob
                    : rat_to_double(config.xi / 10) * std::pow(static_cast<double>(n), 1 - G);
  prob = std::min(prob, 1.0);
  uint64_t threshold = bernoulli_threshold(rat_from_double(prob));

  for (int attempt = 0; attempt < config.max_retries; ++attempt) {
    CounterRng rng(seed.child(static_cast<uint64_t>(attempt)));
    std::vector<std::vector<int>> sampled;
    for (const auto& K : families.cliques)
      if (rng.next() < threshold) sampled.push_back(K);

    // greedy pruning: keep a clique when disjoint from everything kept
    std::vector<std::vector<int>> kept;
    std::vector<char> used(n, 0);
    for (const auto& K : sampled) {
      bool clash = false;
      for (int v : K)
        if (used[v]) {
          clash = true;
          break;
        }
      if (clash) continue;
      for (int v : K) used[v] = 1;
      kept.push_back(K);
    }

    // honest recount per pair
    std::map<std::pair<int, int>, long long> counts;
    long long min_count = -1;
    std::pair<int, int> min_pair{-1, -1};
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        long long c = 0;
        for (const auto& K : kept) {
          if (std::binary_search(K.begin(), K.end(), u) ||
              std::binary_search(K.begin(), K.end(), v))
            continue;
          if (is_good(g, K, u) && is_good(g, K, v)) ++c;
        }
        counts[{u, v}] = c;
        if (min_count < 0 || c < min_count) {
          min_count = c;
          min_pair = {u, v};
        }
      }

    res.retries_used = attempt + 1;
    if (min_count >= target) {
      res.ok = true;
      res.cliques = kept;
      res.pair_counts = std::move(counts);
      res.min_count = min_count;
      res.min_pair = min_pair;
      long long covered = static_cast<long long>(kept.size()) * G;
      res.coverage_certified =
          static_cast<double>(covered) <= 10.0 * G * config.delta2 * n;
      res.note = "target " + std::to_string(target) + " met";
      return res;
    }
    // remember the best failing attempt for the report
    if (res.pair_counts.empty() || min_count > res.min_count) {
      res.cliques = kept;
      res.pair_counts = std::move(counts);
      res.min_count = min_count;
      res.min_pair = min_pair;
    }
  }
  res.note = "target " + std::to_string(target) + " missed after " +
             std::to_string(config.max_retries) + " retries";
  return res;
}

long long min_common_neighborhood(const Graph& g, int m) {
  long long best = g.n();
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if (!cur.empty()) {
      long long c = static_cast<long long>(g.common_neighborhood(cur).size());
      best = std::min(best, c);
      if (static_cast<int>(cur.size()) == m) return;
    }
    for (int v = from; v < g.n(); ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return best;
}

}  // namespace tilekit
