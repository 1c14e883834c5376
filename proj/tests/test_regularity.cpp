#include <doctest.h>

#include <algorithm>
#include <bit>

#include "tilekit/generators.hpp"
#include "tilekit/regularity.hpp"

using namespace tilekit;

namespace {

// straight quantifier sweep over all admissible subset pairs, memoised edge
// counts via subset DP; the independent verdict used against the library
bool sweep_is_regular(const Graph& g, const std::vector<int>& X, const std::vector<int>& Y,
                      const Rat& eps, const Rat& d) {
  int nx = static_cast<int>(X.size()), ny = static_cast<int>(Y.size());
  std::vector<uint32_t> adj(nx, 0);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      if (g.has_edge(X[i], Y[j])) adj[i] |= 1u << j;
  std::vector<int> expop(1u << ny, 0);
  for (uint32_t ym = 1; ym < (1u << ny); ++ym) expop[ym] = std::popcount(ym);

  for (uint32_t ym = 1; ym < (1u << ny); ++ym) {
    int sy = expop[ym];
    if (Rat(sy) < eps * Rat(ny)) continue;
    // e(X', Y') by peeling the lowest X-bit
    std::vector<long long> cnt(1u << nx, 0);
    for (uint32_t xm = 1; xm < (1u << nx); ++xm) {
      uint32_t low = xm & (~xm + 1);
      int li = std::countr_zero(low);
      cnt[xm] = cnt[xm ^ low] + std::popcount(adj[li] & ym);
    }
    for (uint32_t xm = 1; xm < (1u << nx); ++xm) {
      int sx = std::popcount(xm);
      if (Rat(sx) < eps * Rat(nx)) continue;
      Rat dens = Rat(cnt[xm]) / (Rat(sx) * Rat(sy));
      if (dens - d >= eps || d - dens >= eps) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("density basics") {
  Graph kb = gen_complete_multipartite({3, 3});
  CHECK(density(kb, {0, 1, 2}, {3, 4, 5}) == 1);
  Graph em = gen_empty(6);
  CHECK(density(em, {0, 1, 2}, {3, 4, 5}) == 0);
  Graph k4 = gen_complete(4);
  CHECK(density(k4, {0, 1}, {2, 3}) == 1);
  CHECK_THROWS_AS(density(k4, {}, {2}), std::invalid_argument);
  CHECK_THROWS_AS(density(k4, {0, 1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("regular and irregular pairs with witnesses") {
  Graph kb = gen_complete_multipartite({6, 6});
  std::vector<int> X{0, 1, 2, 3, 4, 5}, Y{6, 7, 8, 9, 10, 11};
  auto stats = check_eps_regular(kb, X, Y, Rat(1, 4), Rat(1));
  CHECK(stats.regular);
  CHECK(stats.mode == "exact");
  CHECK(stats.min_deg_x_to_y == 6);

  // half-split: one dense block, one empty block
  Graph half(12);
  for (int i = 0; i < 3; ++i)
    for (int j = 6; j < 12; ++j) half.add_edge(i, j);
  auto irr = check_eps_regular(half, X, Y, Rat(3, 10), Rat(1, 2));
  CHECK_FALSE(irr.regular);
  REQUIRE(irr.witness.has_value());
  auto& [wx, wy, dens] = *irr.witness;
  CHECK(density(half, wx, wy) == dens);
  CHECK((dens - Rat(1, 2) >= Rat(3, 10) || Rat(1, 2) - dens >= Rat(3, 10)));
}

TEST_CASE("exhaustive verdict agrees with the independent sweep") {
  for (uint64_t seed = 0; seed < 25; ++seed) {
    int nx = 4 + static_cast<int>(seed % 5);
    int ny = 4 + static_cast<int>((seed / 5) % 5);
    Graph g = gen_gnp(nx + ny, Rat(1, 2), Seed{7000 + seed});
    std::vector<int> X, Y;
    for (int i = 0; i < nx; ++i) X.push_back(i);
    for (int j = 0; j < ny; ++j) Y.push_back(nx + j);
    Rat eps(2 + seed % 3, 10);
    Rat d = density(g, X, Y);
    auto stats = check_eps_regular(g, X, Y, eps, d);
    REQUIRE(stats.mode == "exact");
    INFO("seed ", seed);
    CHECK(stats.regular == sweep_is_regular(g, X, Y, eps, d));
  }
}

TEST_CASE("slicing arithmetic") {
  auto out = slicing_params(parse_rat("0.01"), parse_rat("0.5"), parse_rat("0.4"));
  CHECK(out.eps_prime == Rat(1, 50));
  CHECK(out.d_lo == Rat(39, 100));
  CHECK(out.d_hi == Rat(41, 100));
  CHECK_THROWS_AS(slicing_params(parse_rat("0.01"), parse_rat("0.001"), Rat(1, 2)),
                  std::invalid_argument);
  CHECK(slicing_params(parse_rat("0.04"), parse_rat("0.1"), Rat(1, 2)).eps_prime == Rat(2, 5));

  auto add = slicing_adding_params(parse_rat("0.001"), parse_rat("0.05"), Rat(1, 2));
  CHECK(add.eps_prime == Rat(3, 10));
  CHECK(add.d_lo == Rat(1, 2) - Rat(3, 20));
  CHECK(add.d_hi == Rat(1, 2) + Rat(3, 20));
  CHECK(slicing_adding_params(parse_rat("0.04"), parse_rat("0.05"), Rat(1, 2)).eps_prime ==
        Rat(4, 5));
}

TEST_CASE("conforming split") {
  std::vector<int> part;
  for (int v = 0; v < 12; ++v) part.push_back(v);
  auto pieces = random_conforming_split(part, {3, 7}, 3, Seed{11});
  REQUIRE(pieces.size() == 3);
  for (const auto& p : pieces) CHECK(p.size() == 4);
  CHECK(std::binary_search(pieces[0].begin(), pieces[0].end(), 3));
  CHECK(std::binary_search(pieces[0].begin(), pieces[0].end(), 7));

  auto again = random_conforming_split(part, {3, 7}, 3, Seed{11});
  CHECK(pieces == again);
  auto other = random_conforming_split(part, {3, 7}, 3, Seed{12});
  CHECK(pieces != other);

  auto plain = random_conforming_split(part, {}, 4, Seed{5});
  CHECK(plain.size() == 4);

  std::vector<int> big_z{0, 1, 2, 3, 4, 5, 6};
  CHECK_THROWS_AS(random_conforming_split(part, big_z, 3, Seed{1}), std::invalid_argument);
}

TEST_CASE("split preserves cross degrees on complete bipartite fixtures") {
  Graph kb = gen_complete_multipartite({6, 12});
  std::vector<int> right;
  for (int v = 6; v < 18; ++v) right.push_back(v);
  auto pieces = random_conforming_split(right, {}, 3, Seed{21});
  for (int x = 0; x < 6; ++x)
    for (const auto& piece : pieces) {
      long long deg = 0;
      for (int v : piece) deg += kb.has_edge(x, v) ? 1 : 0;
      CHECK(deg == static_cast<long long>(piece.size()));
    }
}
