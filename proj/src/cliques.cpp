#include "tilekit/cliques.hpp"

#include <algorithm>
#include <stdexcept>

#include "tilekit/bitset_util.hpp"

namespace tilekit {

namespace {

struct CliqueEnum {
  const Graph& g;
  int k;
  long long limit;
  std::vector<std::vector<int>> out;
  std::vector<int> cur;

  bool done() const { return limit >= 0 && static_cast<long long>(out.size()) >= limit; }

  // cand holds vertices > cur.back() adjacent to everything in cur.
  void rec(const std::vector<uint64_t>& cand) {
    if (done()) return;
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    int need = k - static_cast<int>(cur.size());
    if (bits::popcount(cand) < need) return;
    std::vector<int> cs = bits::to_vertices(cand);
    for (int v : cs) {
      if (done()) return;
      cur.push_back(v);
      std::vector<uint64_t> next(cand.size());
      const uint64_t* r = g.row(v);
      for (size_t w = 0; w < cand.size(); ++w) next[w] = cand[w] & r[w];
      // keep only vertices above v
      for (int u = 0; u <= v; ++u) bits::clear_bit(next.data(), u);
      rec(next);
      cur.pop_back();
    }
  }
};

}  // namespace

std::vector<std::vector<int>> enumerate_cliques(const Graph& g, int k,
                                                const std::vector<int>* within, long long limit) {
  if (k < 1) throw std::invalid_argument("enumerate_cliques: k must be >= 1");
  std::vector<int> dom;
  if (within) {
    dom = canonical_vertex_set(*within, g.n());
  } else {
    dom.resize(g.n());
    for (int v = 0; v < g.n(); ++v) dom[v] = v;
  }
  CliqueEnum e{g, k, limit, {}, {}};
  auto start = bits::make_mask(g.n(), dom);
  e.rec(start);
  return e.out;
}

std::optional<std::vector<int>> find_clique_in_subset(const Graph& g, const std::vector<int>& S,
                                                      int s) {
  auto found = enumerate_cliques(g, s, &S, 1);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::optional<std::vector<int>> find_clique_in_family(const Graph& g,
                                                      const std::vector<std::vector<int>>& family,
                                                      int s) {
  for (const auto& set : family) {
    if (static_cast<int>(set.size()) != s) continue;
    if (g.is_clique(set)) return canonical_vertex_set(set, g.n());
  }
  return std::nullopt;
}

namespace {

// Max clique with a greedy colouring bound.
struct MaxClique {
  const Graph& g;
  std::vector<int> best, cur;

  void expand(std::vector<int>& cand) {
    if (cand.empty()) {
      if (cur.size() > best.size()) best = cur;
      return;
    }
    // greedy colouring of candidates; colour numbers bound the clique size
    std::vector<int> color(cand.size(), 0);
    std::vector<std::vector<int>> classes;
    for (size_t i = 0; i < cand.size(); ++i) {
      int v = cand[i];
      size_t c = 0;
      for (; c < classes.size(); ++c) {
        bool ok = true;
        for (int u : classes[c])
          if (g.has_edge(u, v)) {
            ok = false;
            break;
          }
        if (ok) break;
      }
      if (c == classes.size()) classes.emplace_back();
      classes[c].push_back(v);
      color[i] = static_cast<int>(c) + 1;
    }
    std::vector<std::pair<int, int>> order;  // (color, vertex)
    for (size_t i = 0; i < cand.size(); ++i) order.emplace_back(color[i], cand[i]);
    std::sort(order.begin(), order.end());
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      auto [c, v] = order[i];
      if (cur.size() + c <= best.size()) return;
      cur.push_back(v);
      std::vector<int> next;
      for (int j = 0; j < i; ++j)
        if (g.has_edge(order[j].second, v)) next.push_back(order[j].second);
      expand(next);
      cur.pop_back();
    }
  }
};

}  // namespace

std::vector<int> max_independent_set(const Graph& g) {
  Graph comp = g.complement();
  MaxClique mc{comp, {}, {}};
  std::vector<int> all(g.n());
  for (int v = 0; v < g.n(); ++v) all[v] = v;
  mc.expand(all);
  std::sort(mc.best.begin(), mc.best.end());
  return mc.best;
}

}  // namespace tilekit
