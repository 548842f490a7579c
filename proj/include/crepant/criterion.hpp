#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crepant/numeric.hpp"
#include "crepant/quotient.hpp"

namespace crepant {

// Two-parameter Gorenstein type 1/l(1,...,1,alpha,beta) in dimension r,
// with alpha + beta = l - (r - 2) and alpha, beta >= 1.
struct TwoParamType {
  Int r = 4;
  Int l = 4;
  Int alpha = 1;
  Int beta = 1;
};

// Validates the constraints above; r >= 4, l >= r.
TwoParamType make_two_param(Int r, Int l, Int alpha, Int beta);

QuotientType to_quotient(const TwoParamType& t);

// gcd(alpha, beta, l); always divides r - 2.
Int weight_gcd(const TwoParamType& t);

// (r - 2) / weight_gcd.
Int mu(const TwoParamType& t);

// Arithmetic invariants of a type with weight_gcd = 1.
struct CharNumbers {
  Int t1 = 0, t2 = 0;      // gcd(alpha, l), gcd(beta, l)
  Int z1 = 0, z2 = 0;      // l / t2, (alpha + r - 2) / t2
  Int c1 = 0, c2 = 0;      // normalized solution of c1*z1 + c2*z2 = 1
  Int p_breve = 0;         // (c1*l + c2*alpha) / t1
  Int q = 0;               // l / (t1 * t2)
  Int p = 0;               // p_breve mod q
  std::vector<Int> lambda; // regular continued-fraction entries of q/p, empty for p = 0
  Int kappa = 0;           // number of those entries
};

CharNumbers characteristic_numbers(const TwoParamType& t);

enum class Branch { CON1, CON2, CON2_P0, FAIL_GCD, FAIL_T, FAIL_CONGRUENCE };
const char* branch_name(Branch b);

struct Witness {
  std::string condition;
  bool holds = false;
};

struct Decision {
  bool resolvable = false;
  Branch branch = Branch::CON1;
  Int mu = 1;
  std::optional<CharNumbers> chars;  // present when weight_gcd = 1
  std::vector<Witness> witnesses;
};

// Decides existence of a crepant full resolution for a two-parameter type.
Decision decide_two_param(const TwoParamType& t);

// One-parameter type 1/l(1,...,1,l-(r-1)): resolvable iff l mod (r-1) is 0
// or 1; dims filled per the cohomology closed form when resolvable.
struct OneParamDecision {
  bool resolvable = false;
  std::vector<Int> dims;
};

OneParamDecision decide_one_param(Int r, Int l);

// Closed-form cohomology dimensions for a resolvable one-parameter type.
std::vector<Int> one_param_dims(Int r, Int l);

// Brute-force verdict for an arbitrary Gorenstein type. The Hilbert basis
// condition is necessary in general and also sufficient when at least r-2
// weights coincide.
enum class BruteVerdict { RESOLVABLE, NOT_RESOLVABLE, NECESSARY_ONLY };

struct BruteDecision {
  BruteVerdict verdict = BruteVerdict::NOT_RESOLVABLE;
  bool hilbert_all_junior = false;
  bool iff_applicable = false;  // at least r-2 equal weights
};

// Requires r >= 4, Gorenstein, small.
BruteDecision decide_bruteforce(const QuotientType& t,
                                long long guard = 100000000LL);

// Parameters of the reduced two-dimensional cone attached to a type with
// weight_gcd = 1 and mu != 1. q is always valid; p and rho additionally
// require both residues [t1] and [t2] mod (r-2) to equal 1.
struct ReducedConeParams {
  Int q = 1;
  bool has_p = false;
  Int p = 0;
  Int rho = 0;
};

ReducedConeParams reduced_cone_params(const TwoParamType& t);

// Multiplicity of the reduced cone for any type, by the general product
// formula.
Int reduced_cone_multiplicity(const TwoParamType& t);

}  // namespace crepant
