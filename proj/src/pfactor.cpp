#include "tilekit/pfactor.hpp"

#include <algorithm>
#include <stdexcept>

namespace tilekit {

PlacedPiece PlacedPiece::clique(std::vector<int> verts) {
  PlacedPiece p;
  p.kind = Kind::Clique;
  std::sort(verts.begin(), verts.end());
  p.order = static_cast<int>(verts.size());
  p.verts = std::move(verts);
  return p;
}

PlacedPiece PlacedPiece::gadget(int h, std::vector<std::vector<int>> L,
                                std::vector<std::vector<int>> M,
                                std::vector<std::vector<int>> N) {
  PlacedPiece p;
  p.kind = Kind::Gadget;
  p.order = h;
  p.L = std::move(L);
  p.M = std::move(M);
  p.N = std::move(N);
  for (const auto& set : p.L) p.verts.insert(p.verts.end(), set.begin(), set.end());
  for (const auto& set : p.M) p.verts.insert(p.verts.end(), set.begin(), set.end());
  for (const auto& set : p.N) p.verts.insert(p.verts.end(), set.begin(), set.end());
  std::sort(p.verts.begin(), p.verts.end());
  return p;
}

PFactor init_trivial(const Graph& host, const RParams& params) {
  if (params.variant != Variant::A) throw std::invalid_argument("init_trivial: variant A required");
  PFactor f;
  f.host = &host;
  f.params = params;
  for (int v = 0; v < host.n(); ++v) f.pieces.push_back(PlacedPiece::clique({v}));
  return f;
}

PieceCounts piece_counts(const PFactor& f) {
  PieceCounts c;
  c.k.assign(f.params.m + 2, 0);
  c.q.assign(f.params.m + 1, 0);
  for (const auto& piece : f.pieces) {
    if (piece.kind == PlacedPiece::Kind::Clique)
      c.k[piece.order] += 1;
    else
      c.q[piece.order] += 1;
  }
  return c;
}

IndexVector compute_index(const PFactor& f) {
  auto c = piece_counts(f);
  int m = f.params.m, s = f.params.s, t = f.params.t;
  IndexVector ix;
  long long phi_top = c.k[m + 1];
  for (int h = 1; h <= m; ++h) phi_top += static_cast<long long>((m - h) * s + t) * c.q[h];
  ix.push_back(phi_top);
  for (int h = m; h >= 1; --h) {
    ix.push_back(c.k[h] + static_cast<long long>(s - t) * c.q[h]);
    ix.push_back(c.q[h]);
  }
  return ix;
}

std::string index_str(const IndexVector& ix) {
  std::string out = "(";
  for (size_t i = 0; i < ix.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(ix[i]);
  }
  return out + ")";
}

namespace {

bool is_required_clique(const Graph& g, const std::vector<int>& set) {
  for (size_t a = 0; a < set.size(); ++a)
    for (size_t b = a + 1; b < set.size(); ++b)
      if (!g.has_edge(set[a], set[b])) return false;
  return true;
}

bool complete_between(const Graph& g, const std::vector<int>& A, const std::vector<int>& B) {
  for (int u : A)
    for (int v : B)
      if (!g.has_edge(u, v)) return false;
  return true;
}

}  // namespace

std::optional<std::string> validate_pfactor(const PFactor& f) {
  if (!f.host) return "no host graph";
  const Graph& g = *f.host;
  int m = f.params.m, s = f.params.s, t = f.params.t;
  std::vector<char> seen(g.n(), 0);
  for (size_t pi = 0; pi < f.pieces.size(); ++pi) {
    const auto& piece = f.pieces[pi];
    for (int v : piece.verts) {
      if (v < 0 || v >= g.n()) return "piece " + std::to_string(pi) + ": vertex out of range";
      if (seen[v]) return "piece " + std::to_string(pi) + ": vertex reused";
      seen[v] = 1;
    }
    if (piece.kind == PlacedPiece::Kind::Clique) {
      if (piece.order < 1 || piece.order > m + 1)
        return "piece " + std::to_string(pi) + ": clique order out of range";
      if (static_cast<int>(piece.verts.size()) != piece.order)
        return "piece " + std::to_string(pi) + ": clique size mismatch";
      if (!is_required_clique(g, piece.verts))
        return "piece " + std::to_string(pi) + ": not a clique in the host";
    } else {
      int h = piece.order;
      if (h < 1 || h > m) return "piece " + std::to_string(pi) + ": gadget order out of range";
      int x = s - t, y = (m - h) * s + t;
      if (static_cast<int>(piece.L.size()) != x || static_cast<int>(piece.M.size()) != y ||
          static_cast<int>(piece.N.size()) != y)
        return "piece " + std::to_string(pi) + ": gadget set counts wrong";
      for (const auto& set : piece.L)
        if (static_cast<int>(set.size()) != h || !is_required_clique(g, set))
          return "piece " + std::to_string(pi) + ": bad L-set";
      for (const auto& set : piece.M)
        if (static_cast<int>(set.size()) != m - h + 1 || !is_required_clique(g, set))
          return "piece " + std::to_string(pi) + ": bad M-set";
      for (const auto& set : piece.N)
        if (static_cast<int>(set.size()) != h || !is_required_clique(g, set))
          return "piece " + std::to_string(pi) + ": bad N-set";
      for (const auto& l : piece.L)
        for (const auto& mset : piece.M)
          if (!complete_between(g, l, mset))
            return "piece " + std::to_string(pi) + ": missing L-M edges";
      for (int j = 0; j < y; ++j)
        if (!complete_between(g, piece.M[j], piece.N[j]))
          return "piece " + std::to_string(pi) + ": missing M-N edges";
      if (static_cast<int>(piece.verts.size()) != (m + 1 - h) * f.params.r)
        return "piece " + std::to_string(pi) + ": gadget vertex count wrong";
    }
  }
  for (int v = 0; v < g.n(); ++v)
    if (!seen[v]) return "vertex " + std::to_string(v) + " uncovered";
  return std::nullopt;
}

void normalize_pieces(PFactor& f) {
  std::stable_sort(f.pieces.begin(), f.pieces.end(), [](const PlacedPiece& a, const PlacedPiece& b) {
    if (a.kind != b.kind) return a.kind == PlacedPiece::Kind::Clique;
    if (a.order != b.order) return a.order < b.order;
    return a.verts < b.verts;
  });
}

}  // namespace tilekit
