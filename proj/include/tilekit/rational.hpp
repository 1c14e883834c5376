#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace tilekit {

// Exact arithmetic everywhere a weight, density or probability is compared.
// cpp_rational keeps values gcd-reduced with a positive denominator.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Accepts "3/5", "0.25", "-2", "1e-3" style decimals. Throws std::invalid_argument.
Rat parse_rat(const std::string& text);

// Canonical "p/q" (or "p" when q == 1).
std::string rat_str(const Rat& q);

// A double is itself a rational m*2^e; conversion is exact.
Rat rat_from_double(double x);
double rat_to_double(const Rat& q);

Int rat_num(const Rat& q);
Int rat_den(const Rat& q);
Int lcm_int(const Int& a, const Int& b);

}  // namespace tilekit
