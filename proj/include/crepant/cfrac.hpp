#pragma once

#include <utility>
#include <vector>

#include "crepant/numeric.hpp"

namespace crepant {

// Regular continued fraction [a1,...,av] of kappa/lambda.
// Entries satisfy a1 >= 1, ai >= 1, av >= 2.
struct RegularCF {
  Int kappa = 0;
  Int lambda = 0;
  std::vector<Int> entries;
};

// Negative-regular continued fraction [[c1,...,crho]] of kappa/lambda.
// Every entry satisfies ci >= 2.
struct NegRegCF {
  Int kappa = 0;
  Int lambda = 0;
  std::vector<Int> entries;
};

// Convergent table for a regular expansion, indices shifted by one:
// P[i+1] holds P_i, starting at P_{-1} = 0, P_0 = 1, Q_{-1} = 1, Q_0 = 0.
struct ConvergentTable {
  std::vector<Int> P;
  std::vector<Int> Q;
  Int p_at(Int i) const { return P.at(static_cast<size_t>(i + 1)); }
  Int q_at(Int i) const { return Q.at(static_cast<size_t>(i + 1)); }
};

// Convergent table for a negative-regular expansion, indices shifted by one:
// R[i+1] holds R_i, starting at R_{-1} = 0, R_0 = 1, S_{-1} = -1, S_0 = 0.
struct NegConvergentTable {
  std::vector<Int> R;
  std::vector<Int> S;
  Int r_at(Int i) const { return R.at(static_cast<size_t>(i + 1)); }
  Int s_at(Int i) const { return S.at(static_cast<size_t>(i + 1)); }
};

// Requires 0 < lambda < kappa and gcd(kappa, lambda) = 1 (lambda = 1 allowed).
RegularCF regular_expand(Int kappa, Int lambda);
NegRegCF negreg_expand(Int kappa, Int lambda);

ConvergentTable convergents(const RegularCF& cf);
NegConvergentTable convergents(const NegRegCF& cf);

// Evaluates an entry list back to a reduced fraction (kappa, lambda).
std::pair<Int, Int> eval_regular(const std::vector<Int>& entries);
std::pair<Int, Int> eval_negreg(const std::vector<Int>& entries);

// Rewrites a regular expansion into the negative-regular expansion of the
// same fraction without re-expanding.
NegRegCF regular_to_negreg(const RegularCF& cf);

// Minimal Bezout pair (x0, x0') with kappa*x0 + lambda*x0' = 1 and
// 2*|x0| <= lambda, or (x0, x0') = (0, 1) when lambda = 1.
std::pair<Int, Int> bezout_min(Int kappa, Int lambda);

enum class DualCase { PRW, DEU };

// Regular expansions of q/(q-p) and q/p for 0 < p < q, gcd(p, q) = 1,
// classified by whether q/(q-p) starts with entry 1.
struct DualExpansions {
  RegularCF upper;  // q/(q-p)
  RegularCF lower;  // q/p
  DualCase dual_case = DualCase::PRW;
};

DualExpansions dual_expansions(Int q, Int p);

const char* dual_case_name(DualCase c);

}  // namespace crepant
