#include "tilekit/moves.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "tilekit/cliques.hpp"

namespace tilekit {

namespace {

bool adjacent_to_all(const Graph& g, int x, const std::vector<int>& set) {
  for (int v : set)
    if (v == x || !g.has_edge(x, v)) return false;
  return true;
}

std::vector<int> pieces_of(const PFactor& f, PlacedPiece::Kind kind, int order) {
  std::vector<int> idx;
  for (size_t i = 0; i < f.pieces.size(); ++i)
    if (f.pieces[i].kind == kind && f.pieces[i].order == order) idx.push_back(static_cast<int>(i));
  return idx;
}

void erase_pieces(PFactor& f, std::vector<int> idx) {
  std::sort(idx.begin(), idx.end());
  for (auto it = idx.rbegin(); it != idx.rend(); ++it)
    f.pieces.erase(f.pieces.begin() + *it);
}

// Decomposes a gadget into cliques after one L- or N-set was consumed or
// shrunk: matched (M_l, N_l) pairs become K_{m+1}; when the touched set was
// N_idx, its M-partner pairs with the first L-set instead; untouched L-sets
// become K_h copies.
void decompose_gadget_remainder(const PlacedPiece& gd, bool touched_is_l, int touched_idx,
                                std::vector<PlacedPiece>& out) {
  int y = static_cast<int>(gd.M.size());
  if (touched_is_l) {
    for (int l = 0; l < y; ++l) {
      std::vector<int> km1 = gd.M[l];
      km1.insert(km1.end(), gd.N[l].begin(), gd.N[l].end());
      out.push_back(PlacedPiece::clique(std::move(km1)));
    }
    for (int i = 0; i < static_cast<int>(gd.L.size()); ++i)
      if (i != touched_idx) out.push_back(PlacedPiece::clique(gd.L[i]));
  } else {
    // pair the orphaned M-set with the first L-set
    std::vector<int> km1 = gd.M[touched_idx];
    km1.insert(km1.end(), gd.L[0].begin(), gd.L[0].end());
    out.push_back(PlacedPiece::clique(std::move(km1)));
    for (int l = 0; l < y; ++l) {
      if (l == touched_idx) continue;
      std::vector<int> pair = gd.M[l];
      pair.insert(pair.end(), gd.N[l].begin(), gd.N[l].end());
      out.push_back(PlacedPiece::clique(std::move(pair)));
    }
    for (int i = 1; i < static_cast<int>(gd.L.size()); ++i)
      out.push_back(PlacedPiece::clique(gd.L[i]));
  }
}

// Lexicographic k-combinations of idx, capped; stops when visit returns true.
bool for_each_combination(const std::vector<int>& idx, int k,
                          const std::function<bool(const std::vector<int>&)>& visit) {
  int n = std::min(static_cast<int>(idx.size()), kBicliqueSideCap);
  if (k > n) return false;
  std::vector<int> pick(k);
  std::function<bool(int, int)> rec = [&](int at, int from) {
    if (at == k) {
      std::vector<int> chosen(k);
      for (int i = 0; i < k; ++i) chosen[i] = idx[pick[i]];
      return visit(chosen);
    }
    for (int i = from; i <= n - (k - at); ++i) {
      pick[at] = i;
      if (rec(at + 1, i + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

}  // namespace

std::optional<std::string> try_merge_to_qm(PFactor& f) {
  const auto& p = f.params;
  if (p.t != 0) return std::nullopt;
  auto idx = pieces_of(f, PlacedPiece::Kind::Clique, p.m);
  if (static_cast<int>(idx.size()) < p.s) return std::nullopt;
  std::vector<std::vector<int>> L;
  std::vector<int> used(idx.begin(), idx.begin() + p.s);
  for (int i : used) L.push_back(f.pieces[i].verts);
  erase_pieces(f, used);
  f.pieces.push_back(PlacedPiece::gadget(p.m, std::move(L), {}, {}));
  normalize_pieces(f);
  return "merged " + std::to_string(p.s) + " K_" + std::to_string(p.m) + " pieces into Q_" +
         std::to_string(p.m);
}

std::optional<std::string> try_shift_vertex(PFactor& f) {
  const Graph& g = *f.host;
  const auto& p = f.params;
  for (int h = p.m; h >= 1; --h) {
    if (h == p.m && p.t == 0) continue;
    auto targets = pieces_of(f, PlacedPiece::Kind::Clique, h);
    for (int bi : targets) {
      for (int j = 1; j <= h; ++j) {
        auto sources = pieces_of(f, PlacedPiece::Kind::Clique, j);
        for (int ai : sources) {
          if (ai == bi) continue;
          for (int x : f.pieces[ai].verts) {
            if (!adjacent_to_all(g, x, f.pieces[bi].verts)) continue;
            std::vector<int> grown = f.pieces[bi].verts;
            grown.push_back(x);
            std::vector<int> shrunk = f.pieces[ai].verts;
            shrunk.erase(std::find(shrunk.begin(), shrunk.end(), x));
            std::vector<PlacedPiece> added;
            added.push_back(PlacedPiece::clique(std::move(grown)));
            if (!shrunk.empty()) added.push_back(PlacedPiece::clique(std::move(shrunk)));
            erase_pieces(f, {ai, bi});
            for (auto& piece : added) f.pieces.push_back(std::move(piece));
            normalize_pieces(f);
            return "shifted vertex " + std::to_string(x) + " from K_" + std::to_string(j) +
                   " into K_" + std::to_string(h);
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> try_break_gadget(PFactor& f) {
  const Graph& g = *f.host;
  const auto& p = f.params;
  for (size_t ai = 0; ai < f.pieces.size(); ++ai) {
    if (f.pieces[ai].kind != PlacedPiece::Kind::Clique) continue;
    int j = f.pieces[ai].order;
    if (j > p.m) continue;  // K_{m+1} pieces never trade with gadgets
    for (size_t gi = 0; gi < f.pieces.size(); ++gi) {
      if (f.pieces[gi].kind != PlacedPiece::Kind::Gadget) continue;
      int h = f.pieces[gi].order;
      const PlacedPiece A = f.pieces[ai];
      const PlacedPiece Gd = f.pieces[gi];

      auto scan_sets = [&](bool is_l) -> std::optional<std::string> {
        const auto& sets = is_l ? Gd.L : Gd.N;
        for (int si = 0; si < static_cast<int>(sets.size()); ++si) {
          const auto& U = sets[si];
          if (h >= j) {
            // a clique vertex fully joined to U moves over: K_{h+1} appears
            for (int x : A.verts) {
              if (!adjacent_to_all(g, x, U)) continue;
              std::vector<PlacedPiece> added;
              std::vector<int> grown = U;
              grown.push_back(x);
              added.push_back(PlacedPiece::clique(std::move(grown)));
              std::vector<int> rest = A.verts;
              rest.erase(std::find(rest.begin(), rest.end(), x));
              if (!rest.empty()) added.push_back(PlacedPiece::clique(std::move(rest)));
              decompose_gadget_remainder(Gd, is_l, si, added);
              erase_pieces(f, {static_cast<int>(ai), static_cast<int>(gi)});
              for (auto& piece : added) f.pieces.push_back(std::move(piece));
              normalize_pieces(f);
              return "broke Q_" + std::to_string(h) + " growing K_" + std::to_string(j) +
                     "-vertex " + std::to_string(x) + " into K_" + std::to_string(h + 1);
            }
          } else {
            // a gadget vertex fully joined to the clique shifts out: K_{j+1}
            for (int x : U) {
              if (!adjacent_to_all(g, x, A.verts)) continue;
              std::vector<PlacedPiece> added;
              std::vector<int> grown = A.verts;
              grown.push_back(x);
              added.push_back(PlacedPiece::clique(std::move(grown)));
              std::vector<int> shrunk = U;
              shrunk.erase(std::find(shrunk.begin(), shrunk.end(), x));
              if (!shrunk.empty()) added.push_back(PlacedPiece::clique(std::move(shrunk)));
              decompose_gadget_remainder(Gd, is_l, si, added);
              erase_pieces(f, {static_cast<int>(ai), static_cast<int>(gi)});
              for (auto& piece : added) f.pieces.push_back(std::move(piece));
              normalize_pieces(f);
              return "broke Q_" + std::to_string(h) + " shifting vertex " + std::to_string(x) +
                     " into K_" + std::to_string(j) + " making K_" + std::to_string(j + 1);
            }
          }
        }
        return std::nullopt;
      };

      if (auto r = scan_sets(true)) return r;
      if (auto r = scan_sets(false)) return r;
    }
  }
  return std::nullopt;
}

std::optional<std::string> try_form_q_from_cliques(PFactor& f) {
  const Graph& g = *f.host;
  const auto& p = f.params;
  int x_need = p.s - p.t;
  for (int j = p.m; j >= 1; --j) {
    int y_need = (p.m - j) * p.s + p.t;
    if (y_need == 0) continue;  // that shape is the merge move
    auto lefts = pieces_of(f, PlacedPiece::Kind::Clique, j);
    auto rights = pieces_of(f, PlacedPiece::Kind::Clique, p.m + 1);
    if (static_cast<int>(lefts.size()) < x_need || static_cast<int>(rights.size()) < y_need)
      continue;

    std::optional<std::string> result;
    for_each_combination(lefts, x_need, [&](const std::vector<int>& chosen) {
      std::vector<int> left_verts;
      for (int li : chosen)
        left_verts.insert(left_verts.end(), f.pieces[li].verts.begin(),
                          f.pieces[li].verts.end());
      // a right piece is compatible when m+1-j of its vertices see every left
      std::vector<int> sel;
      std::vector<std::vector<int>> msets, nsets;
      for (int ri : rights) {
        if (static_cast<int>(sel.size()) == y_need) break;
        std::vector<int> common, rest;
        for (int v : f.pieces[ri].verts) {
          if (adjacent_to_all(g, v, left_verts))
            common.push_back(v);
          else
            rest.push_back(v);
        }
        if (static_cast<int>(common.size()) < p.m + 1 - j) continue;
        std::vector<int> mf(common.begin(), common.begin() + (p.m + 1 - j));
        std::vector<int> nf(common.begin() + (p.m + 1 - j), common.end());
        nf.insert(nf.end(), rest.begin(), rest.end());
        std::sort(nf.begin(), nf.end());
        sel.push_back(ri);
        msets.push_back(std::move(mf));
        nsets.push_back(std::move(nf));
      }
      if (static_cast<int>(sel.size()) < y_need) return false;

      std::vector<std::vector<int>> L;
      for (int li : chosen) L.push_back(f.pieces[li].verts);
      std::vector<int> remove = chosen;
      remove.insert(remove.end(), sel.begin(), sel.end());
      erase_pieces(f, remove);
      f.pieces.push_back(PlacedPiece::gadget(j, std::move(L), std::move(msets), std::move(nsets)));
      normalize_pieces(f);
      result = "formed Q_" + std::to_string(j) + " from " + std::to_string(x_need) + " K_" +
               std::to_string(j) + " and " + std::to_string(y_need) + " K_" +
               std::to_string(p.m + 1) + " pieces";
      return true;
    });
    if (result) return result;
  }
  return std::nullopt;
}

std::optional<std::string> try_form_q_from_gadgets(PFactor& f) {
  const Graph& g = *f.host;
  const auto& p = f.params;
  int x_need = p.s - p.t;
  for (int j = p.m; j >= 2; --j) {
    int y_need = (p.m - j) * p.s + p.t;
    if (y_need == 0) continue;
    auto lefts = pieces_of(f, PlacedPiece::Kind::Clique, j);
    if (static_cast<int>(lefts.size()) < x_need) continue;
    for (int h = 1; h < j; ++h) {
      auto gadgets = pieces_of(f, PlacedPiece::Kind::Gadget, h);
      if (static_cast<int>(gadgets.size()) < y_need) continue;

      std::optional<std::string> result;
      for_each_combination(lefts, x_need, [&](const std::vector<int>& chosen) {
        std::vector<int> left_verts;
        for (int li : chosen)
          left_verts.insert(left_verts.end(), f.pieces[li].verts.begin(),
                            f.pieces[li].verts.end());
        // compatible gadget: some M-set holds m-j+1 vertices seeing every left
        struct Pick {
          int gi, mset;
          std::vector<int> C, D;
        };
        std::vector<Pick> sel;
        for (int gi : gadgets) {
          if (static_cast<int>(sel.size()) == y_need) break;
          const auto& Gd = f.pieces[gi];
          for (int mi = 0; mi < static_cast<int>(Gd.M.size()); ++mi) {
            std::vector<int> common, rest;
            for (int v : Gd.M[mi]) {
              if (adjacent_to_all(g, v, left_verts))
                common.push_back(v);
              else
                rest.push_back(v);
            }
            if (static_cast<int>(common.size()) < p.m - j + 1) continue;
            Pick pk;
            pk.gi = gi;
            pk.mset = mi;
            pk.C.assign(common.begin(), common.begin() + (p.m - j + 1));
            pk.D.assign(common.begin() + (p.m - j + 1), common.end());
            pk.D.insert(pk.D.end(), rest.begin(), rest.end());
            sel.push_back(std::move(pk));
            break;
          }
        }
        if (static_cast<int>(sel.size()) < y_need) return false;

        std::vector<PlacedPiece> added;
        std::vector<std::vector<int>> L, M, N;
        for (int li : chosen) L.push_back(f.pieces[li].verts);
        for (const auto& pk : sel) {
          const auto& Gd = f.pieces[pk.gi];
          M.push_back(pk.C);
          std::vector<int> nset = pk.D;
          nset.insert(nset.end(), Gd.N[pk.mset].begin(), Gd.N[pk.mset].end());
          std::sort(nset.begin(), nset.end());
          N.push_back(std::move(nset));
          // untouched pairs become K_{m+1}, the old L-part K_h copies
          for (int l = 0; l < static_cast<int>(Gd.M.size()); ++l) {
            if (l == pk.mset) continue;
            std::vector<int> km1 = Gd.M[l];
            km1.insert(km1.end(), Gd.N[l].begin(), Gd.N[l].end());
            added.push_back(PlacedPiece::clique(std::move(km1)));
          }
          for (const auto& lset : Gd.L) added.push_back(PlacedPiece::clique(lset));
        }
        added.push_back(PlacedPiece::gadget(j, std::move(L), std::move(M), std::move(N)));

        std::vector<int> remove = chosen;
        for (const auto& pk : sel) remove.push_back(pk.gi);
        erase_pieces(f, remove);
        for (auto& piece : added) f.pieces.push_back(std::move(piece));
        normalize_pieces(f);
        result = "formed Q_" + std::to_string(j) + " from " + std::to_string(x_need) + " K_" +
                 std::to_string(j) + " and " + std::to_string(y_need) + " Q_" + std::to_string(h) +
                 " pieces";
        return true;
      });
      if (result) return result;
    }
  }
  return std::nullopt;
}

std::optional<std::string> try_matching_swap(PFactor& f, long long c_cap) {
  const Graph& g = *f.host;
  const auto& p = f.params;
  auto counts = piece_counts(f);

  long long small_total = 0;
  for (int i = 1; i <= p.m; ++i) small_total += static_cast<long long>(i) * counts.k[i];
  if (small_total <= c_cap) return std::nullopt;
  int j = 0;
  for (int i = 1; i <= p.m; ++i) {
    if (static_cast<long long>(i) * counts.k[i] * p.m >= c_cap) {
      j = i;
      break;
    }
  }
  if (j == 0) return std::nullopt;

  // deficiency graph: x in a K_j piece joined to all M-vertices of a gadget
  // (order >= j) and missing exactly one vertex of each L/N-set contributes
  // those non-edges
  struct YInfo {
    std::vector<std::pair<int, int>> partners;  // (x, clique piece index)
    int gadget = -1;
    int set_id = -1;  // L-sets then N-sets, per gadget
  };
  std::map<int, YInfo> hedges;

  auto cliques_j = pieces_of(f, PlacedPiece::Kind::Clique, j);
  for (size_t gi = 0; gi < f.pieces.size(); ++gi) {
    const auto& Gd = f.pieces[gi];
    if (Gd.kind != PlacedPiece::Kind::Gadget || Gd.order < j) continue;
    std::vector<int> m_all;
    for (const auto& mset : Gd.M) m_all.insert(m_all.end(), mset.begin(), mset.end());

    for (int ci : cliques_j) {
      for (int x : f.pieces[ci].verts) {
        if (!adjacent_to_all(g, x, m_all)) continue;
        // exactly one non-neighbour in every L- and N-set
        std::vector<std::pair<int, int>> found;  // (set_id, y)
        bool ok = true;
        int set_id = 0;
        for (const auto& segs : {Gd.L, Gd.N}) {
          for (const auto& U : segs) {
            int miss = -1, miss_count = 0;
            for (int v : U)
              if (!g.has_edge(x, v)) {
                miss = v;
                ++miss_count;
              }
            if (miss_count != 1) {
              ok = false;
              break;
            }
            found.push_back({set_id, miss});
            ++set_id;
          }
          if (!ok) break;
        }
        if (!ok) continue;
        for (auto [sid, y] : found) {
          auto& info = hedges[y];
          info.partners.push_back({x, ci});
          info.gadget = static_cast<int>(gi);
          info.set_id = sid;
        }
      }
    }
  }

  std::vector<int> Z;
  for (const auto& [y, info] : hedges)
    if (static_cast<int>(info.partners.size()) >= j + 1) Z.push_back(y);
  if (static_cast<int>(Z.size()) < j + 1) return std::nullopt;

  auto candidates = enumerate_cliques(g, j + 1, &Z);
  for (const auto& clique : candidates) {
    // conservative: one swap per (gadget, set)
    std::set<std::pair<int, int>> sets_used;
    bool distinct = true;
    for (int y : clique) {
      const auto& info = hedges[y];
      if (!sets_used.insert({info.gadget, info.set_id}).second) {
        distinct = false;
        break;
      }
    }
    if (!distinct) continue;

    // match each y to a partner from a distinct clique piece
    std::vector<std::pair<int, int>> chosen(clique.size(), {-1, -1});
    std::set<int> pieces_used;
    std::function<bool(size_t)> match = [&](size_t at) {
      if (at == clique.size()) return true;
      for (auto [x, ci] : hedges[clique[at]].partners) {
        if (pieces_used.count(ci)) continue;
        pieces_used.insert(ci);
        chosen[at] = {x, ci};
        if (match(at + 1)) return true;
        pieces_used.erase(ci);
      }
      return false;
    };
    if (!match(0)) continue;

    // apply: swap x_i for y_i inside the gadgets, shrink the source cliques,
    // add the freed clique
    for (size_t i = 0; i < clique.size(); ++i) {
      int y = clique[i];
      auto [x, ci] = chosen[i];
      auto& Gd = f.pieces[hedges[y].gadget];
      for (auto segs : {&Gd.L, &Gd.N}) {
        for (auto& U : *segs) {
          auto it = std::find(U.begin(), U.end(), y);
          if (it != U.end()) {
            *it = x;
            std::sort(U.begin(), U.end());
          }
        }
      }
      auto vit = std::find(Gd.verts.begin(), Gd.verts.end(), y);
      *vit = x;
      std::sort(Gd.verts.begin(), Gd.verts.end());
      auto& src = f.pieces[ci];
      src.verts.erase(std::find(src.verts.begin(), src.verts.end(), x));
      src.order -= 1;
    }
    f.pieces.push_back(PlacedPiece::clique(clique));
    std::erase_if(f.pieces, [](const PlacedPiece& piece) {
      return piece.kind == PlacedPiece::Kind::Clique && piece.verts.empty();
    });
    normalize_pieces(f);
    return "matching swap freed a K_" + std::to_string(j + 1) + " from " +
           std::to_string(clique.size()) + " gadget vertices";
  }
  return std::nullopt;
}

}  // namespace tilekit
