#include "tilekit/solver.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "tilekit/bitset_util.hpp"
#include "tilekit/cliques.hpp"

namespace tilekit {

namespace {

using Mask = std::vector<uint64_t>;

// Subgraph embedding of `piece` into g with all images inside avail and at
// least the already-fixed prefix; collects distinct image sets.
void collect_piece_embeddings(const Graph& g, const Graph& piece, const Mask& avail,
                              int must_cover, std::set<std::vector<int>>& out) {
  int k = piece.n();
  std::vector<int> map(k, -1);
  std::vector<char> host_used(g.n(), 0);
  auto avail_list = bits::to_vertices(avail);

  // must_cover has to appear in the image: pin it to each piece vertex in turn
  for (int pin = 0; pin < k; ++pin) {
    map[pin] = must_cover;
    host_used[must_cover] = 1;
    std::function<void(int)> rec2 = [&](int pv) {
      if (pv == k) {
        std::vector<int> image(map.begin(), map.end());
        std::sort(image.begin(), image.end());
        out.insert(std::move(image));
        return;
      }
      if (pv == pin) {
        rec2(pv + 1);
        return;
      }
      for (int hv : avail_list) {
        if (host_used[hv]) continue;
        bool ok = true;
        for (int prev = 0; prev < pv && ok; ++prev)
          if (map[prev] >= 0 && piece.has_edge(prev, pv) && !g.has_edge(map[prev], hv)) ok = false;
        if (!ok) continue;
        map[pv] = hv;
        host_used[hv] = 1;
        rec2(pv + 1);
        host_used[hv] = 0;
        map[pv] = -1;
      }
    };
    rec2(0);
    host_used[must_cover] = 0;
    map[pin] = -1;
  }
}

struct CoverSearch {
  const Graph& g;
  int r;
  const Graph* piece;  // null for clique mode
  Mask zmask;
  long long budget;

  Mask uncovered;
  std::vector<std::vector<int>> chosen;
  std::vector<std::vector<int>> best_partial;
  long long nodes = 0;
  bool budget_hit = false;

  int words() const { return g.words(); }

  int piece_size() const { return piece ? piece->n() : r; }

  bool in_z(int v) const { return bits::test_bit(zmask.data(), v); }

  int z_count(const std::vector<int>& verts) const {
    int c = 0;
    for (int v : verts) c += in_z(v) ? 1 : 0;
    return c;
  }

  int pick_vertex() const {
    int best = -1, best_deg = g.n() + 1;
    bits::for_each_bit(uncovered, [&](int v) {
      int d = bits::and_popcount(g.row(v), uncovered.data(), words());
      if (d < best_deg) {
        best_deg = d;
        best = v;
      }
    });
    return best;
  }

  // All r-cliques through v inside uncovered, at most one Z-vertex each.
  std::vector<std::vector<int>> clique_candidates(int v) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur{v};
    int zc = in_z(v) ? 1 : 0;
    Mask cand(words());
    const uint64_t* rv = g.row(v);
    for (int w = 0; w < words(); ++w) cand[w] = rv[w] & uncovered[w];

    std::function<void(const Mask&, int, int)> rec = [&](const Mask& cm, int low, int zcount) {
      if (static_cast<int>(cur.size()) == r) {
        auto sorted = cur;
        std::sort(sorted.begin(), sorted.end());
        out.push_back(std::move(sorted));
        return;
      }
      int need = r - static_cast<int>(cur.size());
      if (bits::popcount(cm) < need) return;
      std::vector<int> cs = bits::to_vertices(cm);
      for (int u : cs) {
        if (u < low) continue;
        int nz = zcount + (in_z(u) ? 1 : 0);
        if (nz > 1) continue;
        cur.push_back(u);
        Mask next(words());
        const uint64_t* ru = g.row(u);
        for (int w = 0; w < words(); ++w) next[w] = cm[w] & ru[w];
        rec(next, u + 1, nz);
        cur.pop_back();
      }
    };
    rec(cand, 0, zc);
    return out;
  }

  std::vector<std::vector<int>> candidates(int v) {
    if (!piece) return clique_candidates(v);
    std::set<std::vector<int>> images;
    collect_piece_embeddings(g, *piece, uncovered, v, images);
    std::vector<std::vector<int>> out;
    for (const auto& img : images)
      if (z_count(img) <= 1) out.push_back(img);
    return out;
  }

  void note_partial() {
    if (chosen.size() > best_partial.size()) best_partial = chosen;
  }

  // Any clique meets an independent set at most once, so a greedy independent
  // set larger than uncovered/r refutes the whole subtree. This is the cheap
  // certificate for hosts built around a large independent part.
  bool independent_set_prunes() {
    if (piece) return false;  // pieces with internal non-edges cover more
    int free = bits::popcount(uncovered);
    std::vector<std::pair<int, int>> order;  // (uncovered degree, vertex)
    order.reserve(free);
    bits::for_each_bit(uncovered, [&](int v) {
      order.push_back({bits::and_popcount(g.row(v), uncovered.data(), words()), v});
    });
    std::sort(order.begin(), order.end());
    Mask picked(words(), 0);
    int size = 0;
    for (auto [deg, v] : order) {
      if (bits::and_popcount(g.row(v), picked.data(), words()) == 0) {
        bits::set_bit(picked.data(), v);
        ++size;
      }
    }
    return static_cast<long long>(size) * r > free;
  }

  enum class Rec { Found, Exhausted, Budget };

  Rec run() {
    ++nodes;
    if (nodes > budget) {
      budget_hit = true;
      note_partial();
      return Rec::Budget;
    }
    if (bits::popcount(uncovered) == 0) return Rec::Found;
    if (independent_set_prunes()) {
      note_partial();
      return Rec::Exhausted;
    }
    int v = pick_vertex();
    auto cands = candidates(v);
    if (cands.empty()) {
      note_partial();
      return Rec::Exhausted;
    }
    for (const auto& c : cands) {
      for (int u : c) bits::clear_bit(uncovered.data(), u);
      chosen.push_back(c);
      Rec sub = run();
      if (sub == Rec::Found) return sub;
      chosen.pop_back();
      for (int u : c) bits::set_bit(uncovered.data(), u);
      if (sub == Rec::Budget) return Rec::Budget;
    }
    return Rec::Exhausted;
  }
};

}  // namespace

FactorResult solve_factor(const FactorInstance& inst, long long node_budget) {
  if (!inst.host) throw std::invalid_argument("solve_factor: no host graph");
  const Graph& g = *inst.host;
  int size = inst.piece ? inst.piece->n() : inst.r;
  if (size < 1) throw std::invalid_argument("solve_factor: piece size must be >= 1");
  if (inst.piece && inst.piece->n() > 12)
    throw std::invalid_argument("solve_factor: explicit pieces capped at 12 vertices");
  if (inst.mode != SolveMode::Maximize && g.n() % size != 0)
    throw std::invalid_argument("solve_factor: vertex count not divisible by piece size");
  if (inst.mode == SolveMode::Maximize && !inst.piece)
    return max_partial_factor(g, inst.r, node_budget);

  CoverSearch search{g,
                     inst.r,
                     inst.piece ? &*inst.piece : nullptr,
                     bits::make_mask(g.n(), canonical_vertex_set(inst.Z, g.n())),
                     node_budget,
                     {},
                     {},
                     {},
                     0,
                     false};
  search.uncovered.assign(g.words(), 0);
  for (int v = 0; v < g.n(); ++v) bits::set_bit(search.uncovered.data(), v);

  auto rec = search.run();
  FactorResult res;
  res.nodes = search.nodes;
  if (rec == CoverSearch::Rec::Found) {
    res.status = SolveStatus::Found;
    res.cliques = search.chosen;
    res.covered = g.n();
  } else if (rec == CoverSearch::Rec::Budget) {
    res.status = SolveStatus::Timeout;
    res.cliques = search.best_partial;
    res.covered = static_cast<int>(res.cliques.size()) * size;
    res.optimal = false;
  } else {
    res.status = SolveStatus::None;
    res.covered = 0;
  }
  return res;
}

namespace {

struct MaxPartial {
  const Graph& g;
  int r;
  long long budget;

  Mask avail;
  std::vector<std::vector<int>> chosen;
  std::vector<std::vector<int>> best;
  long long nodes = 0;
  bool budget_hit = false;

  int words() const { return g.words(); }

  std::vector<std::vector<int>> clique_candidates(int v) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur{v};
    Mask cand(words());
    const uint64_t* rv = g.row(v);
    for (int w = 0; w < words(); ++w) cand[w] = rv[w] & avail[w];
    std::function<void(const Mask&, int)> rec = [&](const Mask& cm, int low) {
      if (static_cast<int>(cur.size()) == r) {
        auto sorted = cur;
        std::sort(sorted.begin(), sorted.end());
        out.push_back(std::move(sorted));
        return;
      }
      if (bits::popcount(cm) < r - static_cast<int>(cur.size())) return;
      for (int u : bits::to_vertices(cm)) {
        if (u < low) continue;
        cur.push_back(u);
        Mask next(words());
        const uint64_t* ru = g.row(u);
        for (int w = 0; w < words(); ++w) next[w] = cm[w] & ru[w];
        rec(next, u + 1);
        cur.pop_back();
      }
    };
    rec(cand, 0);
    return out;
  }

  void rec() {
    ++nodes;
    if (nodes > budget) {
      budget_hit = true;
      return;
    }
    if (chosen.size() > best.size()) best = chosen;
    int free = bits::popcount(avail);
    long long ub = static_cast<long long>(chosen.size()) + free / r;
    if (ub <= static_cast<long long>(best.size())) return;
    if (free < r) return;

    int v = -1, best_deg = g.n() + 1;
    bits::for_each_bit(avail, [&](int u) {
      int d = bits::and_popcount(g.row(u), avail.data(), words());
      if (d < best_deg) {
        best_deg = d;
        v = u;
      }
    });

    for (const auto& c : clique_candidates(v)) {
      for (int u : c) bits::clear_bit(avail.data(), u);
      chosen.push_back(c);
      rec();
      chosen.pop_back();
      for (int u : c) bits::set_bit(avail.data(), u);
      if (budget_hit) return;
    }
    // leave v uncovered
    bits::clear_bit(avail.data(), v);
    rec();
    bits::set_bit(avail.data(), v);
  }
};

}  // namespace

FactorResult max_partial_factor(const Graph& host, int r, long long node_budget) {
  if (r < 2) throw std::invalid_argument("max_partial_factor: r must be >= 2");
  MaxPartial mp{host, r, node_budget, {}, {}, {}, 0, false};
  mp.avail.assign(host.words(), 0);
  for (int v = 0; v < host.n(); ++v) bits::set_bit(mp.avail.data(), v);

  // greedy seed: lexicographically first cliques
  {
    Mask saved = mp.avail;
    std::vector<int> all(host.n());
    for (int v = 0; v < host.n(); ++v) all[v] = v;
    while (true) {
      auto remaining = bits::to_vertices(mp.avail);
      auto c = enumerate_cliques(host, r, &remaining, 1);
      if (c.empty()) break;
      mp.best.push_back(c[0]);
      for (int u : c[0]) bits::clear_bit(mp.avail.data(), u);
    }
    mp.avail = saved;
  }

  mp.rec();
  FactorResult res;
  res.nodes = mp.nodes;
  res.cliques = mp.best;
  res.covered = static_cast<int>(mp.best.size()) * r;
  res.optimal = !mp.budget_hit;
  res.status = mp.budget_hit ? SolveStatus::Timeout : SolveStatus::Found;
  return res;
}

bool validate_factor_result(const FactorInstance& inst, const FactorResult& res) {
  const Graph& g = *inst.host;
  auto z = canonical_vertex_set(inst.Z, g.n());
  auto zmask = bits::make_mask(g.n(), z);
  std::vector<char> seen(g.n(), 0);
  int size = inst.piece ? inst.piece->n() : inst.r;
  for (const auto& c : res.cliques) {
    if (static_cast<int>(c.size()) != size) return false;
    int zc = 0;
    for (int v : c) {
      if (v < 0 || v >= g.n() || seen[v]) return false;
      seen[v] = 1;
      zc += bits::test_bit(zmask.data(), v) ? 1 : 0;
    }
    if (zc > 1) return false;
    if (inst.piece) {
      std::set<std::vector<int>> images;
      Mask m = bits::make_mask(g.n(), c);
      collect_piece_embeddings(g, *inst.piece, m, c[0], images);
      bool found = false;
      for (const auto& img : images)
        if (img == c) {
          found = true;
          break;
        }
      if (!found) return false;
    } else if (!g.is_clique(c)) {
      return false;
    }
  }
  if (res.status == SolveStatus::Found && inst.mode != SolveMode::Maximize) {
    int covered = 0;
    for (char s : seen) covered += s;
    if (covered != g.n()) return false;
  }
  return true;
}

GreedyConformingResult greedy_conforming_collection(const Graph& g, const std::vector<int>& Z,
                                                    int s, int target,
                                                    const std::vector<int>& forbidden) {
  GreedyConformingResult out;
  auto zs = canonical_vertex_set(Z, g.n());
  auto zmask = bits::make_mask(g.n(), zs);
  std::vector<char> used(g.n(), 0);
  for (int v : canonical_vertex_set(forbidden, g.n())) used[v] = 1;

  for (int z : zs) {
    if (static_cast<int>(out.cliques.size()) >= target) break;
    if (used[z]) continue;
    std::vector<int> cand;
    for (int u : g.neighbors(z))
      if (!used[u] && !bits::test_bit(zmask.data(), u)) cand.push_back(u);
    auto ks = find_clique_in_subset(g, cand, s);
    if (!ks) {
      out.failed_at = z;
      return out;
    }
    std::vector<int> clique = *ks;
    clique.push_back(z);
    std::sort(clique.begin(), clique.end());
    for (int u : clique) used[u] = 1;
    out.cliques.push_back(std::move(clique));
  }

  while (static_cast<int>(out.cliques.size()) < target) {
    std::vector<int> cand;
    for (int u = 0; u < g.n(); ++u)
      if (!used[u] && !bits::test_bit(zmask.data(), u)) cand.push_back(u);
    auto ks = find_clique_in_subset(g, cand, s + 1);
    if (!ks) {
      out.failed_at = -1;
      return out;
    }
    for (int u : *ks) used[u] = 1;
    out.cliques.push_back(*ks);
  }
  out.ok = true;
  return out;
}

namespace {

// q-2 further pairwise-disjoint K_s copies inside avail, exhaustively.
bool fill_disjoint_ks(const Graph& g, int s, int count, std::vector<int>& avail,
                      std::vector<std::vector<int>>& acc) {
  if (count == 0) return true;
  auto cliques = enumerate_cliques(g, s, &avail);
  for (const auto& c : cliques) {
    std::vector<int> rest;
    std::set_difference(avail.begin(), avail.end(), c.begin(), c.end(), std::back_inserter(rest));
    acc.push_back(c);
    if (fill_disjoint_ks(g, s, count - 1, rest, acc)) return true;
    acc.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::vector<int>>> find_Fq(const Graph& g, int s, int q,
                                                     const std::vector<int>* within) {
  if (q < 2 || s < 2) throw std::invalid_argument("find_Fq: need q >= 2, s >= 2");
  std::vector<int> dom;
  if (within) {
    dom = canonical_vertex_set(*within, g.n());
  } else {
    dom.resize(g.n());
    for (int v = 0; v < g.n(); ++v) dom[v] = v;
  }
  if (static_cast<int>(dom.size()) > 40)
    throw std::invalid_argument("find_Fq: exhaustive search capped at 40 vertices");

  for (int w : dom) {
    std::vector<int> nbrs;
    for (int u : g.neighbors(w))
      if (std::binary_search(dom.begin(), dom.end(), u)) nbrs.push_back(u);
    auto wings = enumerate_cliques(g, s - 1, &nbrs);
    for (size_t a = 0; a < wings.size(); ++a) {
      for (size_t b = a + 1; b < wings.size(); ++b) {
        std::vector<int> inter;
        std::set_intersection(wings[a].begin(), wings[a].end(), wings[b].begin(), wings[b].end(),
                              std::back_inserter(inter));
        if (!inter.empty()) continue;
        std::vector<int> used{w};
        used.insert(used.end(), wings[a].begin(), wings[a].end());
        used.insert(used.end(), wings[b].begin(), wings[b].end());
        std::sort(used.begin(), used.end());
        std::vector<int> rest;
        std::set_difference(dom.begin(), dom.end(), used.begin(), used.end(),
                            std::back_inserter(rest));
        std::vector<std::vector<int>> extra;
        if (!fill_disjoint_ks(g, s, q - 2, rest, extra)) continue;
        std::vector<std::vector<int>> out;
        std::vector<int> first = wings[a];
        first.push_back(w);
        std::sort(first.begin(), first.end());
        std::vector<int> second = wings[b];
        second.push_back(w);
        std::sort(second.begin(), second.end());
        out.push_back(first);
        out.push_back(second);
        for (auto& e : extra) out.push_back(std::move(e));
        return out;
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<int>> extend_clique_into_part(const Graph& g, const std::vector<int>& K,
                                                        const std::vector<int>& part, int s,
                                                        const std::vector<int>& avoid) {
  auto k = canonical_vertex_set(K, g.n());
  if (!g.is_clique(k)) throw std::invalid_argument("extend_clique_into_part: K is not a clique");
  auto p = canonical_vertex_set(part, g.n());
  std::vector<int> overlap;
  std::set_intersection(k.begin(), k.end(), p.begin(), p.end(), std::back_inserter(overlap));
  if (!overlap.empty())
    throw std::invalid_argument("extend_clique_into_part: K intersects the part");
  auto common = g.common_neighborhood(k);
  std::vector<int> cand;
  std::set_intersection(common.begin(), common.end(), p.begin(), p.end(),
                        std::back_inserter(cand));
  if (!avoid.empty()) {
    auto av = canonical_vertex_set(avoid, g.n());
    std::vector<int> filtered;
    std::set_difference(cand.begin(), cand.end(), av.begin(), av.end(),
                        std::back_inserter(filtered));
    cand = std::move(filtered);
  }
  return find_clique_in_subset(g, cand, s);
}

}  // namespace tilekit
