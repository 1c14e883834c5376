#include "tilekit/regularity.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace tilekit {

Rat density(const Graph& g, const std::vector<int>& X, const std::vector<int>& Y) {
  auto xs = canonical_vertex_set(X, g.n());
  auto ys = canonical_vertex_set(Y, g.n());
  if (xs.empty() || ys.empty()) throw std::invalid_argument("density: empty part");
  std::vector<int> overlap;
  std::set_intersection(xs.begin(), xs.end(), ys.begin(), ys.end(), std::back_inserter(overlap));
  if (!overlap.empty()) throw std::invalid_argument("density: parts must be disjoint");
  long long e = g.edge_count_between(xs, ys);
  return Rat(e) / (Rat(xs.size()) * Rat(ys.size()));
}

namespace {

// Column masks: for each y in Y, the bitmask over X-indices of its neighbours.
std::vector<uint32_t> column_masks(const Graph& g, const std::vector<int>& X,
                                   const std::vector<int>& Y) {
  std::vector<uint32_t> cols(Y.size(), 0);
  for (size_t j = 0; j < Y.size(); ++j)
    for (size_t i = 0; i < X.size(); ++i)
      if (g.has_edge(Y[j], X[i])) cols[j] |= 1u << i;
  return cols;
}

struct Violation {
  uint32_t xmask;
  std::vector<size_t> y_idx;
  Rat dens;
};

// For a fixed X-subset, the extremal Y-subsets per size are the top/bottom
// degree slices, which makes the per-size scan exhaustive-equivalent.
std::optional<Violation> scan_xmask(uint32_t xmask, int sx, const std::vector<uint32_t>& cols,
                                    size_t ny, const Rat& eps, const Rat& d, int bmin) {
  std::vector<std::pair<int, size_t>> degs(ny);
  for (size_t j = 0; j < ny; ++j) degs[j] = {std::popcount(cols[j] & xmask), j};
  std::sort(degs.begin(), degs.end());
  std::vector<long long> prefix(ny + 1, 0);
  for (size_t j = 0; j < ny; ++j) prefix[j + 1] = prefix[j] + degs[j].first;
  long long total = prefix[ny];
  for (int b = bmin; b <= static_cast<int>(ny); ++b) {
    long long emin = prefix[b];
    long long emax = total - prefix[ny - b];
    Rat denom = Rat(sx) * Rat(b);
    Rat dmin = Rat(emin) / denom, dmax = Rat(emax) / denom;
    if (dmax - d >= eps) {
      Violation v;
      v.xmask = xmask;
      v.dens = dmax;
      for (size_t j = ny - b; j < ny; ++j) v.y_idx.push_back(degs[j].second);
      return v;
    }
    if (d - dmin >= eps) {
      Violation v;
      v.xmask = xmask;
      v.dens = dmin;
      for (int j = 0; j < b; ++j) v.y_idx.push_back(degs[j].second);
      return v;
    }
  }
  return std::nullopt;
}

}  // namespace

PairStats check_eps_regular(const Graph& g, const std::vector<int>& X, const std::vector<int>& Y,
                            const Rat& eps, const Rat& d, const Seed& sample_seed) {
  if (eps <= 0) throw std::invalid_argument("check_eps_regular: eps must be positive");
  auto xs = canonical_vertex_set(X, g.n());
  auto ys = canonical_vertex_set(Y, g.n());
  PairStats stats;
  stats.d = density(g, xs, ys);

  stats.min_deg_x_to_y = ys.size();
  for (int x : xs)
    stats.min_deg_x_to_y =
        std::min(stats.min_deg_x_to_y, g.edge_count_between({x}, ys));
  stats.min_deg_y_to_x = xs.size();
  for (int y : ys)
    stats.min_deg_y_to_x =
        std::min(stats.min_deg_y_to_x, g.edge_count_between({y}, xs));

  auto cols = column_masks(g, xs, ys);
  int nx = static_cast<int>(xs.size()), ny = static_cast<int>(ys.size());
  // smallest admissible subset sizes: |X'| >= eps|X|, nonempty
  int axmin = 1, bymin = 1;
  while (Rat(axmin) < eps * Rat(nx)) ++axmin;
  while (Rat(bymin) < eps * Rat(ny)) ++bymin;

  auto report = [&](const Violation& v) {
    std::vector<int> wx, wy;
    for (int i = 0; i < nx; ++i)
      if (v.xmask & (1u << i)) wx.push_back(xs[i]);
    for (size_t j : v.y_idx) wy.push_back(ys[j]);
    std::sort(wy.begin(), wy.end());
    stats.regular = false;
    stats.witness = {wx, wy, v.dens};
  };

  if (nx <= kRegularExactCap && ny <= kRegularExactCap) {
    stats.mode = "exact";
    for (uint32_t xmask = 1; xmask < (1u << nx); ++xmask) {
      int sx = std::popcount(xmask);
      if (sx < axmin) continue;
      auto v = scan_xmask(xmask, sx, cols, ny, eps, d, bymin);
      if (v) {
        report(*v);
        return stats;
      }
    }
    stats.regular = true;
    return stats;
  }

  stats.mode = "sampled";
  CounterRng rng(sample_seed);
  const int kSamples = 2000;
  for (int it = 0; it < kSamples; ++it) {
    int sx = axmin + static_cast<int>(rng.next_below(nx - axmin + 1));
    std::vector<int> idx(nx);
    std::iota(idx.begin(), idx.end(), 0);
    rng.shuffle(idx);
    uint32_t xmask = 0;
    if (nx <= 32) {
      for (int i = 0; i < sx; ++i) xmask |= 1u << idx[i];
      auto v = scan_xmask(xmask, sx, cols, ny, eps, d, bymin);
      if (v) {
        report(*v);
        return stats;
      }
    }
  }
  stats.regular = true;
  return stats;
}

SlicingOut slicing_params(const Rat& eps, const Rat& beta, const Rat& d) {
  if (!(eps > 0 && eps < beta)) throw std::invalid_argument("need 0 < eps < beta");
  if (d > 1) throw std::invalid_argument("need d <= 1");
  SlicingOut out;
  out.eps_prime = std::max(Rat(eps / beta), Rat(Rat(2) * eps));
  out.d_lo = d - eps;
  out.d_hi = d + eps;
  return out;
}

SlicingOut slicing_adding_params(const Rat& xi, const Rat& eps, const Rat& d) {
  if (!(xi > 0 && xi < eps && eps < 1)) throw std::invalid_argument("need 0 < xi < eps < 1");
  SlicingOut out;
  out.eps_prime = std::max(Rat(xi / eps), Rat(Rat(6) * eps));
  out.d_lo = d - Rat(3) * eps;
  out.d_hi = d + Rat(3) * eps;
  return out;
}

std::vector<std::vector<int>> random_conforming_split(const std::vector<int>& part,
                                                      const std::vector<int>& Z, int pieces,
                                                      const Seed& seed) {
  if (pieces < 1) throw std::invalid_argument("random_conforming_split: pieces must be >= 1");
  std::vector<int> p = part;
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  std::vector<int> z = Z;
  std::sort(z.begin(), z.end());
  std::vector<int> zin, rest;
  for (int v : p) {
    if (std::binary_search(z.begin(), z.end(), v))
      zin.push_back(v);
    else
      rest.push_back(v);
  }
  int n = static_cast<int>(p.size());
  int base = n / pieces, extra = n % pieces;
  auto piece_size = [&](int i) { return base + (i < extra ? 1 : 0); };
  if (static_cast<int>(zin.size()) > piece_size(0))
    throw std::invalid_argument("random_conforming_split: Z too large for one piece");

  CounterRng rng(seed);
  rng.shuffle(rest);
  std::vector<std::vector<int>> out(pieces);
  size_t at = 0;
  for (int i = 0; i < pieces; ++i) {
    int want = piece_size(i);
    if (i == 0) {
      out[0] = zin;
    }
    while (static_cast<int>(out[i].size()) < want) out[i].push_back(rest[at++]);
    std::sort(out[i].begin(), out[i].end());
  }
  return out;
}

}  // namespace tilekit
