#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace ksgap {

// Arbitrary-precision integer for extension counts.
using BigInt = boost::multiprecision::cpp_int;

// Exact rational for polytope geometry.  cpp_rational keeps values in
// canonical reduced form (gcd-free, denominator positive), so equality of
// values is equality of representations.
using Rational = boost::multiprecision::cpp_rational;

// A point of Q^n, indexed by element.
using RationalPoint = std::vector<Rational>;

inline std::string to_decimal_string(const BigInt& v) { return v.str(); }

// Renders "p" for integers and "p/q" otherwise (q > 0, gcd(p, q) = 1).
inline std::string to_fraction_string(const Rational& v) {
  if (boost::multiprecision::denominator(v) == 1)
    return boost::multiprecision::numerator(v).str();
  return boost::multiprecision::numerator(v).str() + "/" +
         boost::multiprecision::denominator(v).str();
}

}  // namespace ksgap
