#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "tilekit/cliques.hpp"
#include "tilekit/generators.hpp"
#include "tilekit/solver.hpp"

using namespace tilekit;

namespace {

Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n)});
  return Graph::from_edges(n, e);
}

// plain recursive partition enumerator, the independent oracle
bool naive_has_factor(const Graph& g, int r, const std::vector<int>& Z) {
  std::vector<char> covered(g.n(), 0);
  std::vector<char> in_z(g.n(), 0);
  for (int v : Z) in_z[v] = 1;
  std::function<bool()> rec = [&]() {
    int v = -1;
    for (int u = 0; u < g.n(); ++u)
      if (!covered[u]) {
        v = u;
        break;
      }
    if (v < 0) return true;
    // all (r-1)-subsets of the remaining vertices
    std::vector<int> rest;
    for (int u = v + 1; u < g.n(); ++u)
      if (!covered[u]) rest.push_back(u);
    std::vector<int> pick(r - 1);
    std::function<bool(int, int)> choose = [&](int at, int from) {
      if (at == r - 1) {
        std::vector<int> clique{v};
        clique.insert(clique.end(), pick.begin(), pick.end());
        int zc = 0;
        for (int u : clique) zc += in_z[u];
        if (zc > 1) return false;
        for (size_t a = 0; a < clique.size(); ++a)
          for (size_t b = a + 1; b < clique.size(); ++b)
            if (!g.has_edge(clique[a], clique[b])) return false;
        for (int u : clique) covered[u] = 1;
        if (rec()) return true;
        for (int u : clique) covered[u] = 0;
        return false;
      }
      for (int i = from; i < static_cast<int>(rest.size()); ++i) {
        pick[at] = rest[i];
        if (choose(at + 1, i + 1)) return true;
      }
      return false;
    };
    if (r == 1) {
      covered[v] = 1;
      if (rec()) return true;
      covered[v] = 0;
      return false;
    }
    return choose(0, 0);
  };
  return rec();
}

}  // namespace

TEST_CASE("factor search basics") {
  Graph c6 = cycle(6);
  FactorInstance inst;
  inst.host = &c6;
  inst.r = 3;
  CHECK(solve_factor(inst).status == SolveStatus::None);

  Graph k6 = gen_complete(6);
  inst.host = &k6;
  auto res = solve_factor(inst);
  CHECK(res.status == SolveStatus::Found);
  CHECK(res.cliques.size() == 2);
  CHECK(validate_factor_result(inst, res));

  inst.Z = {0, 1, 2, 3, 4, 5};
  CHECK(solve_factor(inst).status == SolveStatus::None);
  inst.Z.clear();

  Graph bottle = gen_complete_multipartite({4, 4, 2});
  inst.host = &bottle;
  CHECK_THROWS_AS(solve_factor(inst), std::invalid_argument);  // 3 does not divide 10

  Graph tripartite = gen_complete_multipartite({3, 3, 3});
  inst.host = &tripartite;
  res = solve_factor(inst);
  CHECK(res.status == SolveStatus::Found);
  CHECK(res.cliques.size() == 3);
}

TEST_CASE("solver matches the naive enumerator with conforming sets") {
  for (uint64_t seed = 0; seed < 60; ++seed) {
    int n = (seed % 2 == 0) ? 6 : 9;
    int r = (seed % 2 == 0) ? 2 : 3;
    Graph g = gen_gnp(n, Rat(1 + seed % 5, 8), Seed{4000 + seed});
    std::vector<int> Z;
    if (seed % 3 == 1) Z = {0, 1};
    if (seed % 3 == 2) Z = {0, 2, 4};
    FactorInstance inst;
    inst.host = &g;
    inst.r = r;
    inst.Z = Z;
    auto res = solve_factor(inst);
    REQUIRE(res.status != SolveStatus::Timeout);
    bool naive = naive_has_factor(g, r, Z);
    INFO("seed ", seed);
    CHECK((res.status == SolveStatus::Found) == naive);
    if (res.status == SolveStatus::Found) CHECK(validate_factor_result(inst, res));
  }
}

TEST_CASE("supergraph monotonicity") {
  for (uint64_t seed = 0; seed < 12; ++seed) {
    Graph g = gen_gnp(9, Rat(2, 5), Seed{5000 + seed});
    Graph extra = gen_gnp(9, Rat(1, 4), Seed{6000 + seed});
    Graph super = graph_union(g, extra);
    FactorInstance inst;
    inst.host = &g;
    inst.r = 3;
    if (solve_factor(inst).status == SolveStatus::Found) {
      inst.host = &super;
      CHECK(solve_factor(inst).status == SolveStatus::Found);
    }
  }
}

TEST_CASE("max partial factor") {
  // C6 plus one chord: exactly one triangle
  Graph g = cycle(6);
  g.add_edge(0, 2);
  auto res = max_partial_factor(g, 3);
  CHECK(res.covered == 3);
  CHECK(res.optimal);

  CHECK(max_partial_factor(gen_complete(7), 3).covered == 6);
  CHECK(max_partial_factor(gen_empty(9), 3).covered == 0);
}

TEST_CASE("piece-graph factors") {
  // path factor of the complete bipartite K_{3,3}
  Graph host = gen_complete_multipartite({3, 3});
  Graph path3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  FactorInstance inst;
  inst.host = &host;
  inst.piece = path3;
  auto res = solve_factor(inst);
  CHECK(res.status == SolveStatus::Found);
  CHECK(res.cliques.size() == 2);
  CHECK(validate_factor_result(inst, res));
}

TEST_CASE("clique in subset") {
  Graph k5 = gen_complete(5);
  auto c = find_clique_in_subset(k5, {0, 1, 2}, 3);
  REQUIRE(c.has_value());
  CHECK(*c == std::vector<int>{0, 1, 2});
  CHECK_FALSE(find_clique_in_subset(cycle(6), {0, 1, 2, 3, 4, 5}, 3).has_value());

  Graph g = gen_gnp(60, Rat(9, 10), Seed{77});
  std::vector<int> S;
  for (int v = 0; v < 30; ++v) S.push_back(2 * v);
  auto found = find_clique_in_subset(g, S, 4);
  REQUIRE(found.has_value());
  CHECK(g.is_clique(*found));
}

TEST_CASE("clique within a family") {
  Graph g = cycle(6);
  g.add_edge(0, 2);
  std::vector<std::vector<int>> family{{1, 3, 5}, {0, 1, 2}};
  auto found = find_clique_in_family(g, family, 3);
  REQUIRE(found.has_value());
  CHECK(*found == std::vector<int>{0, 1, 2});
}

TEST_CASE("greedy conforming collection") {
  Graph k10 = gen_complete(10);
  auto res = greedy_conforming_collection(k10, {0, 1}, 2, 2);
  REQUIRE(res.ok);
  CHECK(res.cliques.size() == 2);
  for (const auto& c : res.cliques) {
    CHECK(c.size() == 3);
    CHECK(k10.is_clique(c));
    int zc = 0;
    for (int v : c) zc += (v == 0 || v == 1) ? 1 : 0;
    CHECK(zc == 1);
  }
  // disjointness across cliques
  CHECK(res.cliques[0] != res.cliques[1]);

  auto fail = greedy_conforming_collection(gen_empty(5), {0}, 2, 1);
  CHECK_FALSE(fail.ok);
  CHECK(fail.failed_at == 0);

  auto zfree = greedy_conforming_collection(k10, {}, 2, 3);
  REQUIRE(zfree.ok);
  CHECK(zfree.cliques.size() == 3);
}

TEST_CASE("two cliques sharing a vertex") {
  auto bowtie = find_Fq(gen_complete(5), 2, 2);
  REQUIRE(bowtie.has_value());
  CHECK(bowtie->size() == 2);
  std::vector<int> inter;
  std::set_intersection((*bowtie)[0].begin(), (*bowtie)[0].end(), (*bowtie)[1].begin(),
                        (*bowtie)[1].end(), std::back_inserter(inter));
  CHECK(inter.size() == 1);

  Graph matching = Graph::from_edges(6, {{0, 1}, {2, 3}, {4, 5}});
  CHECK_FALSE(find_Fq(matching, 2, 2).has_value());

  auto tri2 = find_Fq(gen_complete(9), 3, 2);
  REQUIRE(tri2.has_value());
  std::set<int> support;
  for (const auto& c : *tri2) support.insert(c.begin(), c.end());
  CHECK(support.size() == 5);

  // disjoint extras beyond the shared pair
  auto f3 = find_Fq(gen_complete(9), 2, 3);
  REQUIRE(f3.has_value());
  CHECK(f3->size() == 3);
}

TEST_CASE("extending a clique into a part") {
  Graph k8 = gen_complete(8);
  auto ext = extend_clique_into_part(k8, {0}, {4, 5, 6, 7}, 3);
  REQUIRE(ext.has_value());
  CHECK(ext->size() == 3);
  for (int v : *ext) CHECK(v >= 4);

  Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK_FALSE(extend_clique_into_part(star, {0}, {1, 2, 3, 4}, 2).has_value());

  Graph b333 = gen_complete_multipartite({3, 3, 3});
  CHECK_FALSE(extend_clique_into_part(b333, {0}, {3, 4, 5}, 2).has_value());
  auto cross = extend_clique_into_part(b333, {0}, {3, 4, 5, 6, 7, 8}, 2);
  REQUIRE(cross.has_value());
  CHECK(b333.is_clique(*cross));
}
