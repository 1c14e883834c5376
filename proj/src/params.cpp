#include "tilekit/params.hpp"

#include <stdexcept>

namespace tilekit {

RParams RParams::variant_a(int m, int s, int t) {
  if (m < 1 || s < 1) throw std::invalid_argument("variant A needs m >= 1, s >= 1");
  if (t < 0 || t >= s) throw std::invalid_argument("variant A needs 0 <= t < s");
  RParams p;
  p.m = m;
  p.s = s;
  p.t = t;
  p.r = m * s + t;
  p.g = 0;
  p.variant = Variant::A;
  return p;
}

RParams RParams::variant_b(int m, int s, int t) {
  if (m < 1 || s < 1) throw std::invalid_argument("variant B needs m >= 1, s >= 1");
  if (t < 1 || t > s) throw std::invalid_argument("variant B needs 1 <= t <= s");
  RParams p;
  p.m = m;
  p.s = s;
  p.t = t;
  p.r = m * s + t;
  p.g = (t == s) ? 1 : 0;
  p.variant = Variant::B;
  return p;
}

std::string RParams::str() const {
  return "(r=" + std::to_string(r) + ",m=" + std::to_string(m) + ",s=" + std::to_string(s) +
         ",t=" + std::to_string(t) + (variant == Variant::A ? ",A)" : ",B)");
}

}  // namespace tilekit
