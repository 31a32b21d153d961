#pragma once
// Exact arithmetic used throughout. Clique counts grow like 3^(n/3) and
// every threshold comparison in the optimizer is an exact inequality
// between products of powers of 2 and 3, so all counting is done in
// arbitrary precision and rationals are kept reduced. Doubles appear
// only as display values, never in a decision.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace minorclique {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow2(long e) {
  if (e < 0) throw std::invalid_argument("pow2: negative exponent");
  BigInt r = 1;
  return r << e;
}

inline BigInt pow3(long e) {
  if (e < 0) throw std::invalid_argument("pow3: negative exponent");
  return boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(e));
}

// 3^a * 2^b for nonnegative integer exponents.
inline BigInt shape_count_value(long a, long b) { return pow3(a) << b; }

// Compares 3^a1 2^b1 with 3^a2 2^b2 where the exponents are
// nonnegative rationals. Scales both sides by the common denominator
// and compares integers; returns -1/0/+1. Exact, no logarithms.
inline int compare_pow23(const Rational& a1, const Rational& b1,
                         const Rational& a2, const Rational& b2) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::lcm;
  using boost::multiprecision::numerator;
  BigInt d = lcm(lcm(denominator(a1), denominator(b1)),
                 lcm(denominator(a2), denominator(b2)));
  auto scaled = [&](const Rational& q) {
    BigInt s = numerator(q) * (d / denominator(q));
    if (s < 0) throw std::invalid_argument("compare_pow23: negative exponent");
    return static_cast<long>(s);
  };
  BigInt lhs = shape_count_value(scaled(a1), scaled(b1));
  BigInt rhs = shape_count_value(scaled(a2), scaled(b2));
  return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
}

// True iff c * factor is at least 3^a 2^b with rational exponents,
// checked as (c*factor)^d >= 3^(d a) 2^(d b), d the common denominator.
inline bool covers_pow23(const BigInt& c, long factor, const Rational& a,
                         const Rational& b) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::lcm;
  using boost::multiprecision::numerator;
  BigInt d = lcm(denominator(a), denominator(b));
  unsigned du = static_cast<unsigned>(d);
  BigInt lhs = boost::multiprecision::pow(c * factor, du);
  long ae = static_cast<long>(numerator(a) * (d / denominator(a)));
  long be = static_cast<long>(numerator(b) * (d / denominator(b)));
  return lhs >= shape_count_value(ae, be);
}

inline BigInt u128_to_bigint(unsigned __int128 v) {
  BigInt hi = static_cast<std::uint64_t>(v >> 64);
  return (hi << 64) | static_cast<std::uint64_t>(v);
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace minorclique
