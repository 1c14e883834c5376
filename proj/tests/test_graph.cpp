#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "tilekit/cliques.hpp"
#include "tilekit/generators.hpp"
#include "tilekit/graph_io.hpp"
#include "tilekit/rng.hpp"

using namespace tilekit;

TEST_CASE("gnp degenerate probabilities") {
  CHECK(gen_gnp(5, Rat(0), Seed{1}).edge_count() == 0);
  CHECK(gen_gnp(5, Rat(1), Seed{1}).edge_count() == 10);
  CHECK_THROWS_AS(gen_gnp(5, Rat(3, 2), Seed{1}), std::invalid_argument);
}

TEST_CASE("gnp edge count near the binomial mean") {
  Graph g = gen_gnp(1000, Rat(1, 2), Seed{42});
  // mean C(1000,2)/2 = 249750, sigma = sqrt(C(1000,2)/4) ~ 353.4
  double mean = 249750.0, sigma = 353.38;
  CHECK(std::abs(g.edge_count() - mean) < 4 * sigma);
}

TEST_CASE("seeded determinism and stream separation") {
  Graph a = gen_gnp(50, Rat(1, 3), Seed{7});
  Graph b = gen_gnp(50, Rat(1, 3), Seed{7});
  CHECK(a == b);
  Graph c = gen_gnp(50, Rat(1, 3), Seed{7}.child(1));
  CHECK_FALSE(a == c);
  Seed s{7};
  CHECK(s.child(1).key() != s.child(2).key());
}

TEST_CASE("extremal host structure") {
  Graph g = gen_extremal_host(10, Rat(3, 5));
  auto part = extremal_host_independent_part(10, Rat(3, 5));
  CHECK(part.size() == 4);
  CHECK(g.is_independent(part));
  CHECK(g.min_degree() == 6);
  CHECK(max_independent_set(g).size() == 4);

  Graph k10 = gen_extremal_host(10, Rat(9, 10));
  CHECK(k10.edge_count() == 45);  // singleton independent part

  Graph b = gen_extremal_host(12, Rat(2, 3));
  CHECK(max_independent_set(b).size() == 4);

  CHECK_THROWS_AS(gen_extremal_host(10, Rat(1, 3)), std::invalid_argument);  // 20/3 not integral
}

TEST_CASE("complete multipartite") {
  Graph c4 = gen_complete_multipartite({2, 2});
  CHECK(c4.edge_count() == 4);
  Graph b = gen_complete_multipartite({4, 4, 2});
  CHECK(b.n() == 10);
  CHECK(b.edge_count() == 32);
  Graph k3 = gen_complete_multipartite({1, 1, 1});
  CHECK(k3.edge_count() == 3);
  CHECK_THROWS_AS(gen_complete_multipartite({}), std::invalid_argument);
  CHECK_THROWS_AS(gen_complete_multipartite({2, 0}), std::invalid_argument);
}

TEST_CASE("graph union") {
  Graph empty5 = gen_empty(5), k5 = gen_complete(5);
  CHECK(graph_union(empty5, k5) == k5);
  Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(graph_union(c4, c4) == c4);
  Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  Graph chord = Graph::from_edges(3, {{0, 2}});
  CHECK(graph_union(p3, chord).edge_count() == 3);
  CHECK_THROWS_AS(graph_union(p3, c4), std::invalid_argument);
}

TEST_CASE("edge counting convention") {
  Graph k4 = gen_complete(4);
  std::vector<int> all{0, 1, 2, 3};
  CHECK(k4.edge_count_between(all, all) == 12);  // 2 * 6
  Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(c4.common_neighborhood({0, 2}) == std::vector<int>{1, 3});
  CHECK(c4.is_independent({}));
  CHECK_THROWS_AS(c4.edge_count_between({0, 9}, {1}), std::invalid_argument);
}

TEST_CASE("degree-sum identity on random instances") {
  for (uint64_t seed = 0; seed < 5; ++seed) {
    Graph g = gen_gnp(20, Rat(2, 5), Seed{100 + seed});
    CounterRng rng(Seed{200 + seed});
    std::vector<int> X;
    for (int v = 0; v < g.n(); ++v)
      if (rng.next_below(2)) X.push_back(v);
    std::vector<int> Y;
    for (int v = 0; v < g.n(); ++v)
      if (rng.next_below(2)) Y.push_back(v);
    std::vector<int> all(g.n());
    for (int v = 0; v < g.n(); ++v) all[v] = v;
    std::vector<int> comp;
    std::set_difference(all.begin(), all.end(), Y.begin(), Y.end(), std::back_inserter(comp));
    long long lhs = g.edge_count_between(X, Y) + g.edge_count_between(X, comp);
    long long deg_sum = 0;
    for (int x : X) deg_sum += g.degree(x);
    CHECK(lhs == deg_sum);
  }
}

namespace {

// independent naive filter over all k-subsets
long long naive_clique_count(const Graph& g, int k) {
  long long count = 0;
  std::vector<int> idx(k);
  std::function<void(int, int)> rec = [&](int at, int from) {
    if (at == k) {
      std::vector<int> set(idx.begin(), idx.end());
      bool ok = true;
      for (size_t a = 0; a < set.size() && ok; ++a)
        for (size_t b = a + 1; b < set.size() && ok; ++b)
          if (!g.has_edge(set[a], set[b])) ok = false;
      if (ok) ++count;
      return;
    }
    for (int v = from; v < g.n(); ++v) {
      idx[at] = v;
      rec(at + 1, v + 1);
    }
  };
  rec(0, 0);
  return count;
}

}  // namespace

TEST_CASE("clique enumeration") {
  Graph c6 = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  CHECK(enumerate_cliques(c6, 3).empty());
  CHECK(enumerate_cliques(gen_complete(5), 3).size() == 10);
  Graph bottle = gen_complete_multipartite({4, 4, 2});
  CHECK(enumerate_cliques(bottle, 3).size() == 32);

  for (uint64_t seed = 0; seed < 4; ++seed) {
    Graph g = gen_gnp(11, Rat(1, 2), Seed{300 + seed});
    for (int k = 2; k <= 4; ++k)
      CHECK(static_cast<long long>(enumerate_cliques(g, k).size()) == naive_clique_count(g, k));
  }

  // lexicographic order and the limit knob
  auto tri = enumerate_cliques(gen_complete(5), 3, nullptr, 3);
  REQUIRE(tri.size() == 3);
  CHECK(tri[0] == std::vector<int>{0, 1, 2});
  CHECK(tri[1] == std::vector<int>{0, 1, 3});
}

TEST_CASE("graph json round trip and rejection") {
  Graph g = gen_gnp(12, Rat(1, 2), Seed{9});
  Graph back = graph_from_json(graph_to_json(g));
  CHECK(g == back);
  CHECK_THROWS(graph_from_json(R"({"n":3,"edges":[[0,0]]})"));
  CHECK_THROWS(graph_from_json(R"({"n":3,"edges":[[0,1],[0,1]]})"));
  CHECK_THROWS(graph_from_json(R"({"n":3,"edges":[[1,0]]})"));
  CHECK_THROWS(graph_from_json(R"({"n":3,"edges":[[0,5]]})"));
}

TEST_CASE("rational parsing") {
  CHECK(parse_rat("3/5") == Rat(3, 5));
  CHECK(parse_rat("0.25") == Rat(1, 4));
  CHECK(parse_rat("2") == Rat(2));
  CHECK(parse_rat("1e-2") == Rat(1, 100));
  CHECK(rat_str(Rat(10, 4)) == "5/2");
  CHECK(rat_from_double(0.5) == Rat(1, 2));
  CHECK(rat_from_double(0.1) != Rat(1, 10));  // binary value, exactly
}
