#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace tilekit {

// Sorts, deduplicates and range-checks a vertex set. All set-valued arguments
// below go through this, and all outputs are sorted.
std::vector<int> canonical_vertex_set(std::vector<int> verts, int n);

// Simple undirected graph with packed per-vertex adjacency bitsets. Values are
// immutable once built by a generator and safe to share across threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  long long edge_count() const { return edges_; }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  int degree(int v) const;
  std::vector<int> degrees() const;
  int min_degree() const;  // 0 for the empty graph on >=1 vertices
  std::vector<int> neighbors(int v) const;

  // Intersection of neighborhoods; the empty intersection over S = {} is all of V.
  std::vector<int> common_neighborhood(const std::vector<int>& S) const;

  // Vertices relabeled by position in the (canonicalised) set S.
  Graph induced_subgraph(const std::vector<int>& S) const;

  // Ordered-pair count: an edge with both ends in X∩Y contributes twice, so
  // edge_count_between(V, V) equals the degree sum.
  long long edge_count_between(const std::vector<int>& X, const std::vector<int>& Y) const;

  long long edges_inside(const std::vector<int>& S) const;
  bool is_independent(const std::vector<int>& S) const;
  bool is_clique(const std::vector<int>& S) const;
  Graph complement() const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

  // Word-level access for the search kernels.
  int words() const { return words_; }
  const uint64_t* row(int v) const { return bits_.data() + static_cast<size_t>(v) * words_; }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int words_ = 0;
  long long edges_ = 0;
  std::vector<uint64_t> bits_;
};

// Edge-set union of two graphs on the same vertex count.
Graph graph_union(const Graph& a, const Graph& b);

}  // namespace tilekit
