#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace crepant {

using Int = long long;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline BigInt to_bigint(const Rational& r) {
  if (!is_integer(r)) throw std::domain_error("rational is not an integer");
  return numerator(r);
}

// "n" for integers, "n/d" otherwise.
inline std::string rational_str(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

// Binomial coefficient with the convention C(n,k)=0 for k<0 or k>n, n>=0.
inline BigInt binomial(Int n, Int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt acc = 1;
  for (Int i = 1; i <= k; ++i) {
    acc *= (n - k + i);
    acc /= i;
  }
  return acc;
}

// Floor division for possibly negative numerators.
inline Int floor_div(Int a, Int b) {
  if (b <= 0) throw std::invalid_argument("floor_div: divisor must be positive");
  Int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

inline Int ceil_div(Int a, Int b) {
  if (b <= 0) throw std::invalid_argument("ceil_div: divisor must be positive");
  return -floor_div(-a, b);
}

// Nonnegative remainder of a mod b, b > 0.
inline Int pos_mod(Int a, Int b) {
  if (b <= 0) throw std::invalid_argument("pos_mod: modulus must be positive");
  Int m = a % b;
  return m < 0 ? m + b : m;
}

inline Int gcd_ll(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace crepant
