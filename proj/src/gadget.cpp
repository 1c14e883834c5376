#include "tilekit/gadget.hpp"

#include <stdexcept>

#include "tilekit/generators.hpp"

namespace tilekit {

QGadget build_Q(const RParams& params, int h) {
  if (params.variant != Variant::A) throw std::invalid_argument("build_Q: variant A required");
  if (h < 1 || h > params.m) throw std::invalid_argument("build_Q: h must lie in [1, m]");
  int m = params.m, s = params.s, t = params.t;
  int x = s - t;                // number of L-sets
  int y = (m - h) * s + t;      // number of M-sets and of N-sets

  QGadget q;
  q.params = params;
  q.h = h;
  int n = x * h + y * (m - h + 1) + y * h;
  q.graph = Graph(n);

  int at = 0;
  auto take = [&](int count) {
    std::vector<int> set(count);
    for (int i = 0; i < count; ++i) set[i] = at++;
    return set;
  };
  for (int i = 0; i < x; ++i) q.L.push_back(take(h));
  for (int j = 0; j < y; ++j) q.M.push_back(take(m - h + 1));
  for (int j = 0; j < y; ++j) q.N.push_back(take(h));

  auto add_clique = [&](const std::vector<int>& set) {
    for (size_t a = 0; a < set.size(); ++a)
      for (size_t b = a + 1; b < set.size(); ++b) q.graph.add_edge(set[a], set[b]);
  };
  auto add_complete_bipartite = [&](const std::vector<int>& A, const std::vector<int>& B) {
    for (int u : A)
      for (int v : B) q.graph.add_edge(u, v);
  };

  for (const auto& set : q.L) add_clique(set);
  for (const auto& set : q.M) add_clique(set);
  for (const auto& set : q.N) add_clique(set);
  for (const auto& l : q.L)
    for (const auto& mset : q.M) add_complete_bipartite(l, mset);
  for (int j = 0; j < y; ++j) add_complete_bipartite(q.M[j], q.N[j]);
  return q;
}

Rat q_h_constant(const RParams& params, int h) {
  if (params.variant != Variant::A)
    throw std::invalid_argument("q_h_constant: variant A required");
  if (h < 1 || h > params.m) throw std::invalid_argument("q_h_constant: h must lie in [1, m]");
  if (params.t == 0 && h == params.m) return Rat(1);  // plain T-factor, no rescale
  long long x = params.s - params.t;
  long long y = static_cast<long long>(params.m - h) * params.s + params.t;
  return Rat(params.r, static_cast<long long>(params.s) * (params.m - h + 1) * x * y);
}

PackingCert factor_Q_with_T(const RParams& params, int h) {
  QGadget q = build_Q(params, h);
  int m = params.m, s = params.s, t = params.t;
  WeightedGraph T = build_T(params);
  PackingCert cert;
  cert.host = q.graph;

  if (t == 0 && h == m) {
    // s disjoint K_m copies; m unscaled copies of T per block, the weight-0
    // vertex parked on the first vertex of the first block.
    for (const auto& block : q.L) {
      for (int rep = 0; rep < m; ++rep) {
        PackingPiece piece;
        piece.pattern = T;
        piece.map.assign(m + 1, 0);
        for (int k = 0; k < m; ++k) piece.map[k] = block[k];
        piece.map[m] = q.L[0][0];
        cert.pieces.push_back(std::move(piece));
      }
    }
    return cert;
  }

  int x = s - t;
  int y = (m - h) * s + t;
  Rat qh = q_h_constant(params, h);
  WeightedGraph T1 = scale(T, Rat(x) * qh);
  WeightedGraph T2 = scale(T, Rat(y) * qh);

  // Block (i, j) covers L_i ∪ M_j ∪ N_j; within it, for every choice of the
  // special M-vertex c: one T1-copy on L_i ∪ M_j and one T2-copy on N_j ∪ M_j,
  // each sending the light vertex to M_j[c].
  for (int i = 0; i < x; ++i) {
    for (int j = 0; j < y; ++j) {
      for (int c = 0; c < m - h + 1; ++c) {
        PackingPiece a;
        a.pattern = T1;
        a.map.assign(m + 1, 0);
        int at = 0;
        for (int v : q.L[i]) a.map[at++] = v;
        for (int d = 0; d < m - h + 1; ++d)
          if (d != c) a.map[at++] = q.M[j][d];
        a.map[m] = q.M[j][c];
        cert.pieces.push_back(std::move(a));

        PackingPiece b;
        b.pattern = T2;
        b.map.assign(m + 1, 0);
        at = 0;
        for (int v : q.N[j]) b.map[at++] = v;
        for (int d = 0; d < m - h + 1; ++d)
          if (d != c) b.map[at++] = q.M[j][d];
        b.map[m] = q.M[j][c];
        cert.pieces.push_back(std::move(b));
      }
    }
  }
  return cert;
}

Int common_denominator_b(const RParams& params) {
  Int b = 1;
  for (int h = 1; h <= params.m; ++h) b = lcm_int(b, rat_den(q_h_constant(params, h)));
  return b;
}

namespace {

// Appends src's pieces into dst with every host vertex shifted by offset and
// every piece of scale sigma expanded into sigma*b copies of (1/b) * T.
void append_expanded(PackingCert& dst, const PackingCert& src, int offset, const Int& b,
                     const WeightedGraph& t_over_b) {
  for (const auto& piece : src.pieces) {
    // scale of the piece relative to T, read off any vertex of nonzero weight
    Rat rel = 0;
    for (size_t i = 0; i < piece.pattern.weights.size(); ++i) {
      if (t_over_b.weights[i] != 0) {
        rel = piece.pattern.weights[i] / (t_over_b.weights[i] * Rat(b));
        break;
      }
    }
    Rat copies_rat = rel * Rat(b);
    if (rat_den(copies_rat) != 1) throw std::logic_error("non-integral copy count");
    long long copies = rat_num(copies_rat).convert_to<long long>();
    PackingPiece shifted;
    shifted.pattern = t_over_b;
    shifted.map.resize(piece.map.size());
    for (size_t i = 0; i < piece.map.size(); ++i) shifted.map[i] = piece.map[i] + offset;
    for (long long c = 0; c < copies; ++c) dst.pieces.push_back(shifted);
  }
}

}  // namespace

PackingCert one_over_b_factor(const RParams& params, const std::vector<int>& gadget_counts,
                              int clique_count) {
  if (params.variant != Variant::A)
    throw std::invalid_argument("one_over_b_factor: variant A required");
  if (static_cast<int>(gadget_counts.size()) != params.m)
    throw std::invalid_argument("one_over_b_factor: need one count per h in [1, m]");
  Int b = common_denominator_b(params);
  WeightedGraph t_over_b = scale(build_T(params), Rat(1, b));

  // Disjoint-union host: all K_{m+1} blocks first, then the gadget blocks.
  std::vector<std::pair<PackingCert, int>> blocks;  // (sub cert, copies)
  blocks.push_back({t_factor_of_clique(params), clique_count});
  for (int h = 1; h <= params.m; ++h)
    if (gadget_counts[h - 1] > 0) blocks.push_back({factor_Q_with_T(params, h), gadget_counts[h - 1]});

  int total = 0;
  for (const auto& [sub, copies] : blocks) total += sub.host.n() * copies;
  PackingCert cert;
  cert.host = Graph(total);
  int offset = 0;
  for (const auto& [sub, copies] : blocks) {
    for (int c = 0; c < copies; ++c) {
      for (int u = 0; u < sub.host.n(); ++u)
        for (int v : sub.host.neighbors(u))
          if (v > u) cert.host.add_edge(u + offset, v + offset);
      append_expanded(cert, sub, offset, b, t_over_b);
      offset += sub.host.n();
    }
  }
  return cert;
}

Graph gen_bottle(int m, int r, int t) {
  if (m < 1 || t < 0) throw std::invalid_argument("gen_bottle: need m >= 1, t >= 0");
  if ((r - t) % m != 0) throw std::invalid_argument("gen_bottle: (r - t) not divisible by m");
  int s = (r - t) / m;
  if (s < 1 || t >= s) throw std::invalid_argument("gen_bottle: need 0 <= t < s");
  std::vector<int> classes(m, m * s);
  if (m * t > 0) classes.push_back(m * t);  // degenerate class dropped at t = 0
  return gen_complete_multipartite(classes);
}

}  // namespace tilekit
