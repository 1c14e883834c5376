#include "tilekit/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tilekit/bitset_util.hpp"

namespace tilekit {

std::vector<int> canonical_vertex_set(std::vector<int> verts, int n) {
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (int v : verts) {
    if (v < 0 || v >= n)
      throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0," +
                                  std::to_string(n) + ")");
  }
  return verts;
}

Graph::Graph(int n) : n_(n), words_(bits::words_for(n)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  bits_.assign(static_cast<size_t>(n_) * words_, 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0," +
                                std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) return;
  bits::set_bit(bits_.data() + static_cast<size_t>(u) * words_, v);
  bits::set_bit(bits_.data() + static_cast<size_t>(v) * words_, u);
  ++edges_;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  return bits::test_bit(row(u), v);
}

int Graph::degree(int v) const {
  check_vertex(v);
  return bits::popcount(row(v), words_);
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = bits::popcount(row(v), words_);
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int best = n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, bits::popcount(row(v), words_));
  return best;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  bits::for_each_bit(row(v), words_, [&](int u) { out.push_back(u); });
  return out;
}

std::vector<int> Graph::common_neighborhood(const std::vector<int>& S) const {
  auto s = canonical_vertex_set(S, n_);
  std::vector<uint64_t> acc(words_, ~0ULL);
  if (n_ % 64 != 0 && words_ > 0) acc[words_ - 1] = (1ULL << (n_ % 64)) - 1;
  for (int v : s) {
    const uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) acc[w] &= r[w];
  }
  return bits::to_vertices(acc);
}

Graph Graph::induced_subgraph(const std::vector<int>& S) const {
  auto s = canonical_vertex_set(S, n_);
  Graph g(static_cast<int>(s.size()));
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (has_edge(s[i], s[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

long long Graph::edge_count_between(const std::vector<int>& X, const std::vector<int>& Y) const {
  auto xs = canonical_vertex_set(X, n_);
  auto ys = canonical_vertex_set(Y, n_);
  auto ymask = bits::make_mask(n_, ys);
  long long total = 0;
  for (int x : xs) total += bits::and_popcount(row(x), ymask.data(), words_);
  return total;
}

long long Graph::edges_inside(const std::vector<int>& S) const {
  return edge_count_between(S, S) / 2;
}

bool Graph::is_independent(const std::vector<int>& S) const {
  return edges_inside(S) == 0;
}

bool Graph::is_clique(const std::vector<int>& S) const {
  auto s = canonical_vertex_set(S, n_);
  long long k = static_cast<long long>(s.size());
  return edges_inside(s) == k * (k - 1) / 2;
}

Graph Graph::complement() const {
  Graph g(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!has_edge(u, v)) g.add_edge(u, v);
  return g;
}

Graph graph_union(const Graph& a, const Graph& b) {
  if (a.n() != b.n()) throw std::invalid_argument("graph_union: vertex counts differ");
  Graph g = a;
  for (int v = 0; v < b.n(); ++v) {
    const uint64_t* r = b.row(v);
    bits::for_each_bit(r, b.words(), [&](int u) {
      if (u > v) g.add_edge(v, u);
    });
  }
  return g;
}

}  // namespace tilekit
