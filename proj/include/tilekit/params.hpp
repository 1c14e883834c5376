#pragma once

#include <string>

namespace tilekit {

enum class Variant { A, B };

// Canonical parametrization r = m*s + t.
//   variant A (gadget work): 0 <= t <  s, g unused.
//   variant B (absorbers / size adjustment): 1 <= t <= s, g = 1 iff t == s.
struct RParams {
  int r = 0, s = 0, m = 0, t = 0, g = 0;
  Variant variant = Variant::A;

  static RParams variant_a(int m, int s, int t);
  static RParams variant_b(int m, int s, int t);

  bool singular() const { return variant == Variant::B && t == s; }
  std::string str() const;
};

}  // namespace tilekit
