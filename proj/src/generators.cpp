#include "tilekit/generators.hpp"

#include <stdexcept>

namespace tilekit {

Graph gen_gnp(int n, const Rat& p, const Seed& seed) {
  if (p < 0 || p > 1) throw std::invalid_argument("gen_gnp: p outside [0,1]");
  Graph g(n);
  CounterRng rng(seed);
  if (p == 1) {
    return gen_complete(n);
  }
  uint64_t threshold = bernoulli_threshold(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next() < threshold) g.add_edge(u, v);
  return g;
}

std::vector<int> extremal_host_independent_part(int n, const Rat& alpha) {
  if (alpha <= 0 || alpha >= 1) throw std::invalid_argument("alpha must lie in (0,1)");
  Rat a_size = (Rat(1) - alpha) * n;
  if (rat_den(a_size) != 1)
    throw std::invalid_argument("(1-alpha)*n is not integral: " + rat_str(a_size));
  int k = rat_num(a_size).convert_to<int>();
  std::vector<int> part(k);
  for (int i = 0; i < k; ++i) part[i] = i;
  return part;
}

Graph gen_extremal_host(int n, const Rat& alpha) {
  auto part = extremal_host_independent_part(n, alpha);
  int k = static_cast<int>(part.size());
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (u >= k || v >= k) g.add_edge(u, v);
  return g;
}

Graph gen_complete_multipartite(const std::vector<int>& class_sizes) {
  if (class_sizes.empty()) throw std::invalid_argument("empty class list");
  int n = 0;
  for (int s : class_sizes) {
    if (s < 1) throw std::invalid_argument("class sizes must be >= 1");
    n += s;
  }
  Graph g(n);
  std::vector<int> cls(n);
  int at = 0, ci = 0;
  for (int s : class_sizes) {
    for (int i = 0; i < s; ++i) cls[at++] = ci;
    ++ci;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (cls[u] != cls[v]) g.add_edge(u, v);
  return g;
}

Graph gen_empty(int n) { return Graph(n); }

Graph gen_complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace tilekit
