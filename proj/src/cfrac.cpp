#include "crepant/cfrac.hpp"

#include <stdexcept>

namespace crepant {

namespace {

void check_fraction(Int kappa, Int lambda) {
  if (lambda <= 0 || kappa <= lambda)
    throw std::invalid_argument("continued fraction requires 0 < lambda < kappa");
  if (gcd_ll(kappa, lambda) != 1)
    throw std::invalid_argument("continued fraction requires gcd(kappa, lambda) = 1");
}

}  // namespace

RegularCF regular_expand(Int kappa, Int lambda) {
  check_fraction(kappa, lambda);
  RegularCF cf{kappa, lambda, {}};
  // Euclidean algorithm; last quotient absorbs the final 1.
  Int a = kappa, b = lambda;
  while (b > 0) {
    cf.entries.push_back(a / b);
    Int r = a % b;
    a = b;
    b = r;
  }
  if (cf.entries.size() > 1 && cf.entries.back() == 1) {
    cf.entries.pop_back();
    cf.entries.back() += 1;
  }
  return cf;
}

NegRegCF negreg_expand(Int kappa, Int lambda) {
  check_fraction(kappa, lambda);
  NegRegCF cf{kappa, lambda, {}};
  // Ceiling division at every step.
  Int a = kappa, b = lambda;
  while (true) {
    Int c = ceil_div(a, b);
    cf.entries.push_back(c);
    Int r = c * b - a;
    if (r == 0) break;
    a = b;
    b = r;
  }
  return cf;
}

ConvergentTable convergents(const RegularCF& cf) {
  ConvergentTable t;
  t.P = {0, 1};
  t.Q = {1, 0};
  for (Int a : cf.entries) {
    size_t n = t.P.size();
    t.P.push_back(a * t.P[n - 1] + t.P[n - 2]);
    t.Q.push_back(a * t.Q[n - 1] + t.Q[n - 2]);
  }
  return t;
}

NegConvergentTable convergents(const NegRegCF& cf) {
  NegConvergentTable t;
  t.R = {0, 1};
  t.S = {-1, 0};
  for (Int b : cf.entries) {
    size_t n = t.R.size();
    t.R.push_back(b * t.R[n - 1] - t.R[n - 2]);
    t.S.push_back(b * t.S[n - 1] - t.S[n - 2]);
  }
  return t;
}

std::pair<Int, Int> eval_regular(const std::vector<Int>& entries) {
  if (entries.empty()) throw std::invalid_argument("empty expansion");
  // Fold from the right: value = a + 1/value.
  Int num = entries.back(), den = 1;
  for (size_t i = entries.size() - 1; i-- > 0;) {
    Int nnum = entries[i] * num + den;
    den = num;
    num = nnum;
  }
  return {num, den};
}

std::pair<Int, Int> eval_negreg(const std::vector<Int>& entries) {
  if (entries.empty()) throw std::invalid_argument("empty expansion");
  // Fold from the right: value = c - 1/value.
  Int num = entries.back(), den = 1;
  for (size_t i = entries.size() - 1; i-- > 0;) {
    Int nnum = entries[i] * num - den;
    den = num;
    num = nnum;
  }
  return {num, den};
}

NegRegCF regular_to_negreg(const RegularCF& cf) {
  const auto& a = cf.entries;
  NegRegCF out{cf.kappa, cf.lambda, {}};
  Int v = static_cast<Int>(a.size());
  if (v == 1) {
    out.entries.push_back(a[0]);
    return out;
  }
  // Block rewrite: first entry rises by one, each even-position entry a_{2i}
  // becomes a run of (a_{2i} - 1) twos, interior odd entries rise by two and
  // a final odd entry rises by one.
  out.entries.push_back(a[0] + 1);
  for (Int i = 2; i <= v; i += 2) {
    for (Int k = 0; k < a[i - 1] - 1; ++k) out.entries.push_back(2);
    if (i + 1 <= v) out.entries.push_back(a[i] + (i + 1 < v ? 2 : 1));
  }
  return out;
}

std::pair<Int, Int> bezout_min(Int kappa, Int lambda) {
  check_fraction(kappa, lambda);
  RegularCF cf = regular_expand(kappa, lambda);
  ConvergentTable t = convergents(cf);
  Int v = static_cast<Int>(cf.entries.size());
  Int eps = (v % 2 == 0) ? 1 : -1;
  Int x0 = eps * t.q_at(v - 1);
  Int x1 = -eps * t.p_at(v - 1);
  return {x0, x1};
}

DualExpansions dual_expansions(Int q, Int p) {
  if (p <= 0 || p >= q) throw std::invalid_argument("dual_expansions requires 0 < p < q");
  if (gcd_ll(p, q) != 1) throw std::invalid_argument("dual_expansions requires gcd(p, q) = 1");
  DualExpansions d;
  d.upper = regular_expand(q, q - p);
  d.lower = regular_expand(q, p);
  d.dual_case = (d.upper.entries[0] == 1) ? DualCase::PRW : DualCase::DEU;
  return d;
}

const char* dual_case_name(DualCase c) {
  return c == DualCase::PRW ? "PRW" : "DEU";
}

}  // namespace crepant
