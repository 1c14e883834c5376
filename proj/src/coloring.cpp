#include "tilekit/coloring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace tilekit {

namespace {

bool color_rec(const Graph& g, const std::vector<int>& order, std::vector<int>& color, size_t at,
               int k, int used) {
  if (at == order.size()) return true;
  int v = order[at];
  int try_up_to = std::min(k, used + 1);  // new colours are interchangeable
  for (int c = 1; c <= try_up_to; ++c) {
    bool ok = true;
    for (size_t j = 0; j < at; ++j)
      if (color[order[j]] == c && g.has_edge(order[j], v)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    color[v] = c;
    if (color_rec(g, order, color, at + 1, k, std::max(used, c))) return true;
    color[v] = 0;
  }
  return false;
}

}  // namespace

bool is_k_colorable(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("negative colour count");
  if (g.n() == 0) return true;
  if (k == 0) return false;
  std::vector<int> order(g.n());
  std::iota(order.begin(), order.end(), 0);
  auto deg = g.degrees();
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] > deg[b]; });
  std::vector<int> color(g.n(), 0);
  return color_rec(g, order, color, 0, k, 0);
}

int chromatic_number(const Graph& g) {
  if (g.n() == 0) return 0;
  if (g.n() > kColoringCap)
    throw std::invalid_argument("graph too large for exact colouring (cap " +
                                std::to_string(kColoringCap) + ")");
  for (int k = 1; k <= g.n(); ++k)
    if (is_k_colorable(g, k)) return k;
  return g.n();
}

namespace {

// Visits independent sets of size k in lexicographic order until f returns true.
bool for_each_independent_set(const Graph& g, int k, std::vector<int>& cur, int next,
                              const std::function<bool(const std::vector<int>&)>& f) {
  if (static_cast<int>(cur.size()) == k) return f(cur);
  for (int v = next; v < g.n(); ++v) {
    bool ok = true;
    for (int u : cur)
      if (g.has_edge(u, v)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    cur.push_back(v);
    if (for_each_independent_set(g, k, cur, v + 1, f)) return true;
    cur.pop_back();
  }
  return false;
}

}  // namespace

CriticalChromatic critical_chromatic(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("critical_chromatic: empty graph");
  if (g.n() > kColoringCap)
    throw std::invalid_argument("graph too large for exact colouring (cap " +
                                std::to_string(kColoringCap) + ")");
  if (g.edge_count() == 0)
    throw std::invalid_argument("critical_chromatic undefined for edgeless graphs");

  CriticalChromatic out;
  out.chi = chromatic_number(g);

  std::vector<int> all(g.n());
  std::iota(all.begin(), all.end(), 0);

  // Smallest class over proper chi-colourings: the first k for which some
  // independent k-set leaves a (chi-1)-colourable remainder.
  for (int k = 1; k <= g.n(); ++k) {
    std::vector<int> cur;
    bool found = for_each_independent_set(g, k, cur, 0, [&](const std::vector<int>& S) {
      std::vector<int> rest;
      std::set_difference(all.begin(), all.end(), S.begin(), S.end(), std::back_inserter(rest));
      return is_k_colorable(g.induced_subgraph(rest), out.chi - 1);
    });
    if (found) {
      out.t_min = k;
      break;
    }
  }

  out.s_value = Rat(g.n() - out.t_min, out.chi - 1);
  out.chi_cr = Rat(g.n()) / out.s_value;
  return out;
}

}  // namespace tilekit
