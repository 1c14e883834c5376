#include "tilekit/rational.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace tilekit {

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rat(num, den);
  }
  auto epos = text.find_first_of("eE");
  if (epos != std::string::npos) {
    Rat base = parse_rat(text.substr(0, epos));
    int exp = std::stoi(text.substr(epos + 1));
    Int pow10 = 1;
    for (int i = 0; i < std::abs(exp); ++i) pow10 *= 10;
    return exp >= 0 ? base * Rat(pow10) : base / Rat(pow10);
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) return Rat(Int(text));
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  bool neg = !digits.empty() && digits[0] == '-';
  if (neg) digits.erase(digits.begin());
  // leading zeros would make cpp_int read the literal as octal
  size_t first = digits.find_first_not_of('0');
  digits = first == std::string::npos ? "0" : digits.substr(first);
  if (digits.empty()) throw std::invalid_argument("bad rational: " + text);
  size_t frac_len = text.size() - dot - 1;
  Int den = 1;
  for (size_t i = 0; i < frac_len; ++i) den *= 10;
  Int num(digits);
  if (neg) num = -num;
  return Rat(num, den);
}

std::string rat_str(const Rat& q) {
  Int num = rat_num(q), den = rat_den(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rat rat_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
  if (x == 0.0) return Rat(0);
  int exp = 0;
  double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
  // 53 doublings make the mantissa integral.
  Int num = static_cast<int64_t>(std::ldexp(mant, 53));
  int e2 = exp - 53;
  if (e2 >= 0) {
    return Rat(num << e2);
  }
  Int den = Int(1) << (-e2);
  return Rat(num, den);
}

double rat_to_double(const Rat& q) { return q.convert_to<double>(); }

Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return a / boost::multiprecision::gcd(a, b) * b;
}

}  // namespace tilekit
