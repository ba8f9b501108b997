#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace gamma3 {

// Exact rational scalar for polynomial-identity checks. Arbitrary-precision
// integers so intermediate expansions never overflow.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

inline Rational rat(long long num, long long den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

inline double to_double(const Rational& r) {
  return static_cast<double>(boost::multiprecision::cpp_rational(
      r.numerator(), r.denominator()));
}

}  // namespace gamma3
