#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace porient {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt pow_int(const BigInt& base, unsigned exp) {
  BigInt r = 1, b = base;
  while (exp) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

inline BigRational pow_rat(const BigRational& base, unsigned exp) {
  BigRational r = 1, b = base;
  while (exp) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

inline bool is_integer(const BigRational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline BigInt to_integer(const BigRational& q) {
  if (!is_integer(q)) throw std::logic_error("expected an integer rational value");
  return boost::multiprecision::numerator(q);
}

}  // namespace porient
