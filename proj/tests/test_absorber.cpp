#include <doctest.h>

#include <set>

#include "tilekit/absorber.hpp"
#include "tilekit/generators.hpp"

using namespace tilekit;

TEST_CASE("goodness predicate") {
  Graph g(5);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  g.add_edge(0, 1);
  CHECK(is_good(g, {1, 2, 3}, 0));  // one of three neighbours suffices

  Graph h(6);
  for (int u = 1; u <= 4; ++u)
    for (int v = u + 1; v <= 4; ++v) h.add_edge(u, v);
  h.add_edge(0, 1);
  CHECK_FALSE(is_good(h, {1, 2, 3, 4}, 0));  // one of four is not enough
  h.add_edge(0, 2);
  CHECK(is_good(h, {1, 2, 3, 4}, 0));

  Graph k5 = gen_complete(5);
  CHECK(is_good(k5, {1, 2, 3}, 0));
  CHECK_THROWS_AS(is_good(k5, {0, 1, 2}, 0), std::invalid_argument);
}

TEST_CASE("pair families on friendly hosts") {
  auto params = RParams::variant_b(2, 2, 1);  // r = 5, clique size m+1 = 3
  Graph k10 = gen_complete(10);
  auto fam = build_pair_families(k10, params, 1);
  CHECK(fam.exhaustive);
  CHECK(fam.clique_size == 3);
  // every triangle avoiding the pair is good for it on a complete host
  CHECK(fam.count_good(k10, 0, 1) == 56);  // C(8,3)
  CHECK(fam.empty_pairs(k10).empty());

  // complete minus a perfect matching still has nonempty families everywhere
  Graph nm = gen_complete(10);
  Graph missing(10);
  for (int i = 0; i < 5; ++i) missing.add_edge(2 * i, 2 * i + 1);
  Graph host(10);
  for (int u = 0; u < 10; ++u)
    for (int v = u + 1; v < 10; ++v)
      if (!missing.has_edge(u, v)) host.add_edge(u, v);
  auto fam2 = build_pair_families(host, params, 1);
  CHECK(fam2.empty_pairs(host).empty());
  fam2.for_each_good(host, 0, 1, [&](size_t i) {
    CHECK(is_good(host, fam2.cliques[i], 0));
    CHECK(is_good(host, fam2.cliques[i], 1));
  });
}

TEST_CASE("common neighbourhood lower bound on compliant hosts") {
  auto params = RParams::variant_b(2, 2, 1);  // t/r = 1/5
  // minimum degree (1 - s/r - delta) n with delta = 1/10, n = 20
  Graph host = gen_extremal_host(20, Rat(3, 5));
  double delta = 0.0;  // this host meets the bound exactly
  long long bound = static_cast<long long>(
      (static_cast<double>(params.t) / params.r - params.m * delta) * host.n());
  CHECK(min_common_neighborhood(host, params.m) >= bound);
}

TEST_CASE("absorber sampling on a complete host") {
  auto params = RParams::variant_b(2, 2, 1);
  Graph host = gen_complete(60);
  auto fam = build_pair_families(host, params, 1);
  AbsorberConfig cfg;
  cfg.sample_prob = 0.003;  // desk-scale override of the asymptotic rate
  cfg.target = 5;
  cfg.max_retries = 5;
  auto res = sample_absorber(host, fam, cfg, Seed{17});
  REQUIRE(res.ok);
  CHECK(res.retries_used <= 5);
  CHECK(res.min_count >= 5);

  // disjointness by construction
  std::set<int> seen;
  for (const auto& K : res.cliques)
    for (int v : K) CHECK(seen.insert(v).second);

  // recount oracle on a few pairs
  for (auto [pair, count] : std::vector<std::pair<std::pair<int, int>, long long>>{
           {{0, 1}, res.pair_counts.at({0, 1})}, {{5, 9}, res.pair_counts.at({5, 9})}}) {
    long long recount = 0;
    for (const auto& K : res.cliques) {
      if (std::binary_search(K.begin(), K.end(), pair.first) ||
          std::binary_search(K.begin(), K.end(), pair.second))
        continue;
      if (is_good(host, K, pair.first) && is_good(host, K, pair.second)) ++recount;
    }
    CHECK(recount == count);
  }

  // determinism in the seed
  auto res2 = sample_absorber(host, fam, cfg, Seed{17});
  CHECK(res2.cliques == res.cliques);
  auto res3 = sample_absorber(host, fam, cfg, Seed{18});
  CHECK(res3.ok);

  // empty families fail
  PairFamilies empty_fam;
  empty_fam.clique_size = 3;
  auto fail = sample_absorber(host, empty_fam, cfg, Seed{1});
  CHECK_FALSE(fail.ok);
}

TEST_CASE("absorber failure reports achieved counts") {
  auto params = RParams::variant_b(1, 2, 1);  // clique size 2
  Graph host = gen_gnp(20, Rat(1, 2), Seed{3});
  auto fam = build_pair_families(host, params, 1);
  AbsorberConfig cfg;
  cfg.sample_prob = 0.05;
  cfg.target = 1000;  // far beyond reach
  cfg.max_retries = 2;
  auto res = sample_absorber(host, fam, cfg, Seed{9});
  CHECK_FALSE(res.ok);
  CHECK(res.retries_used == 2);
  CHECK(res.min_count < 1000);
  CHECK(res.note.find("missed") != std::string::npos);
}
