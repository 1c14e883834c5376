#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace tilekit::bits {

inline int words_for(int n) { return (n + 63) / 64; }

inline void set_bit(uint64_t* m, int v) { m[v >> 6] |= 1ULL << (v & 63); }
inline void clear_bit(uint64_t* m, int v) { m[v >> 6] &= ~(1ULL << (v & 63)); }
inline bool test_bit(const uint64_t* m, int v) { return (m[v >> 6] >> (v & 63)) & 1; }

inline std::vector<uint64_t> make_mask(int n, const std::vector<int>& verts) {
  std::vector<uint64_t> m(words_for(n), 0);
  for (int v : verts) set_bit(m.data(), v);
  return m;
}

inline int popcount(const uint64_t* m, int words) {
  int c = 0;
  for (int w = 0; w < words; ++w) c += std::popcount(m[w]);
  return c;
}

inline int popcount(const std::vector<uint64_t>& m) {
  return popcount(m.data(), static_cast<int>(m.size()));
}

inline int and_popcount(const uint64_t* a, const uint64_t* b, int words) {
  int c = 0;
  for (int w = 0; w < words; ++w) c += std::popcount(a[w] & b[w]);
  return c;
}

template <class F>
inline void for_each_bit(const uint64_t* m, int words, F f) {
  for (int w = 0; w < words; ++w) {
    uint64_t x = m[w];
    while (x) {
      int b = std::countr_zero(x);
      f(w * 64 + b);
      x &= x - 1;
    }
  }
}

template <class F>
inline void for_each_bit(const std::vector<uint64_t>& m, F f) {
  for_each_bit(m.data(), static_cast<int>(m.size()), f);
}

inline std::vector<int> to_vertices(const std::vector<uint64_t>& m) {
  std::vector<int> out;
  for_each_bit(m, [&](int v) { out.push_back(v); });
  return out;
}

}  // namespace tilekit::bits
