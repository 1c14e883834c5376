#include "tilekit/rng.hpp"

#include <limits>
#include <stdexcept>

namespace tilekit {

namespace {
constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

uint64_t mix64(uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Seed Seed::child(uint64_t tag) const {
  Seed c = *this;
  c.path.push_back(tag);
  return c;
}

uint64_t Seed::key() const {
  uint64_t k = mix64(master ^ 0xA5A5A5A5A5A5A5A5ULL);
  for (uint64_t p : path) k = mix64(k ^ mix64(p ^ 0x6A09E667F3BCC909ULL));
  return k;
}

uint64_t CounterRng::next() { return mix64(key_ ^ mix64(counter_++ * kGolden + 1)); }

double CounterRng::next_double() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

uint64_t CounterRng::next_below(uint64_t n) {
  if (n == 0) throw std::invalid_argument("next_below(0)");
  if ((n & (n - 1)) == 0) return next() & (n - 1);
  uint64_t limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % n;
  uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

void CounterRng::shuffle(std::vector<int>& v) {
  for (size_t i = v.size(); i > 1; --i) {
    size_t j = static_cast<size_t>(next_below(i));
    std::swap(v[i - 1], v[j]);
  }
}

uint64_t bernoulli_threshold(const Rat& p) {
  if (p < 0 || p > 1) throw std::invalid_argument("probability outside [0,1]");
  Int scaled = (rat_num(p) << 64) / rat_den(p);
  Int cap = (Int(1) << 64) - 1;
  if (scaled > cap) scaled = cap;
  return scaled.convert_to<uint64_t>();
}

}  // namespace tilekit
