#pragma once

#include <cstdint>
#include <vector>

#include "tilekit/rational.hpp"

namespace tilekit {

// splitmix64 finalizer; the only mixing primitive used for randomness.
uint64_t mix64(uint64_t x);

// A master seed plus a derivation path. Identical (master, path) gives an
// identical stream on any platform; distinct paths give unrelated streams,
// so parallel trials never share state.
struct Seed {
  uint64_t master = 0;
  std::vector<uint64_t> path;

  Seed() = default;
  explicit Seed(uint64_t m) : master(m) {}

  Seed child(uint64_t tag) const;
  uint64_t key() const;
};

// Counter-based generator: output i is a pure function of (key, i).
class CounterRng {
 public:
  explicit CounterRng(const Seed& seed) : key_(seed.key()) {}
  explicit CounterRng(uint64_t key) : key_(key) {}

  uint64_t next();
  double next_double();             // [0,1)
  uint64_t next_below(uint64_t n);  // uniform [0,n), rejection sampled
  void shuffle(std::vector<int>& v);

 private:
  uint64_t key_;
  uint64_t counter_ = 0;
};

// floor(p * 2^64) clamped to UINT64_MAX; draw < threshold realises
// Bernoulli(p) with exactly representable p (callers special-case p == 1).
uint64_t bernoulli_threshold(const Rat& p);

}  // namespace tilekit
