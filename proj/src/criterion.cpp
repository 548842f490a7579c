#include "crepant/criterion.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "crepant/cfrac.hpp"

namespace crepant {

TwoParamType make_two_param(Int r, Int l, Int alpha, Int beta) {
  if (r < 4) throw std::invalid_argument("dimension r must be at least 4");
  if (l < r) throw std::invalid_argument("order l must be at least r");
  if (alpha < 1 || beta < 1) throw std::invalid_argument("weights must be positive");
  if (alpha + beta != l - (r - 2))
    throw std::invalid_argument("weights must satisfy alpha + beta = l - (r - 2)");
  return {r, l, alpha, beta};
}

QuotientType to_quotient(const TwoParamType& t) {
  std::vector<Int> w(static_cast<size_t>(t.r - 2), 1);
  w.push_back(t.alpha);
  w.push_back(t.beta);
  return make_quotient(t.l, std::move(w));
}

Int weight_gcd(const TwoParamType& t) {
  return gcd_ll(t.alpha, gcd_ll(t.beta, t.l));
}

Int mu(const TwoParamType& t) {
  return (t.r - 2) / weight_gcd(t);
}

CharNumbers characteristic_numbers(const TwoParamType& t) {
  if (weight_gcd(t) != 1)
    throw std::invalid_argument("characteristic numbers require gcd(alpha, beta, l) = 1");
  CharNumbers c;
  c.t1 = gcd_ll(t.alpha, t.l);
  c.t2 = gcd_ll(t.beta, t.l);
  if (c.t2 != gcd_ll(t.alpha + (t.r - 2), t.l))
    throw std::logic_error("inconsistent weight gcds");
  c.z1 = t.l / c.t2;
  c.z2 = (t.alpha + (t.r - 2)) / c.t2;
  if (c.z2 == 1) {
    c.c1 = -1;
    c.c2 = c.z1 + 1;
  } else {
    // Smallest positive inverse of z2 modulo z1.
    Int inv = 0;
    {
      Int old_r = c.z1, rr = c.z2, old_s = 0, s = 1;
      while (rr != 0) {
        Int qq = old_r / rr;
        Int tmp = old_r - qq * rr;
        old_r = rr;
        rr = tmp;
        tmp = old_s - qq * s;
        old_s = s;
        s = tmp;
      }
      if (old_r != 1) throw std::logic_error("z1 and z2 are not coprime");
      inv = pos_mod(old_s, c.z1);
    }
    c.c2 = inv;
    c.c1 = (1 - c.c2 * c.z2) / c.z1;
  }
  if (c.c1 * c.z1 + c.c2 * c.z2 != 1) throw std::logic_error("bad Bezout pair");
  if (c.c1 >= 0 || c.c2 <= 0) throw std::logic_error("Bezout pair out of range");
  if ((c.c1 * t.l + c.c2 * t.alpha) % c.t1 != 0)
    throw std::logic_error("p_breve is not integral");
  c.p_breve = (c.c1 * t.l + c.c2 * t.alpha) / c.t1;
  if (t.l % (c.t1 * c.t2) != 0) throw std::logic_error("q is not integral");
  c.q = t.l / (c.t1 * c.t2);
  c.p = pos_mod(c.p_breve, c.q);
  if (c.p != 0) c.lambda = regular_expand(c.q, c.p).entries;
  c.kappa = static_cast<Int>(c.lambda.size());
  return c;
}

const char* branch_name(Branch b) {
  switch (b) {
    case Branch::CON1: return "CON1";
    case Branch::CON2: return "CON2";
    case Branch::CON2_P0: return "CON2-p0";
    case Branch::FAIL_GCD: return "FAIL-gcd";
    case Branch::FAIL_T: return "FAIL-t";
    case Branch::FAIL_CONGRUENCE: return "FAIL-congruence";
  }
  return "?";
}

Decision decide_two_param(const TwoParamType& t) {
  Decision d;
  d.mu = mu(t);
  Int g = weight_gcd(t);
  Int rm2 = t.r - 2;

  d.witnesses.push_back({"gcd(alpha, beta, l) == r - 2", g == rm2});
  if (g == rm2) {
    d.resolvable = true;
    d.branch = Branch::CON1;
    return d;
  }

  d.witnesses.push_back({"gcd(alpha, beta, l) == 1", g == 1});
  if (g != 1) {
    d.resolvable = false;
    d.branch = Branch::FAIL_GCD;
    return d;
  }

  CharNumbers c = characteristic_numbers(t);
  d.chars = c;

  bool t_ok = pos_mod(c.t1, rm2) == 1 && pos_mod(c.t2, rm2) == 1;
  d.witnesses.push_back({"t1 mod (r-2) == 1 and t2 mod (r-2) == 1", t_ok});
  if (!t_ok) {
    d.resolvable = false;
    d.branch = Branch::FAIL_T;
    return d;
  }

  d.witnesses.push_back({"p == 0", c.p == 0});
  if (c.p == 0) {
    d.resolvable = true;
    d.branch = Branch::CON2_P0;
    return d;
  }

  bool shift_ok = pos_mod((c.p_breve - c.p) / c.q, rm2) == 0;
  d.witnesses.push_back({"(p_breve - p)/q divisible by r - 2", shift_ok});

  bool evens_ok = true;
  if (c.kappa >= 3) {
    for (Int j = 1; j <= (c.kappa - 1) / 2; ++j)
      if (pos_mod(c.lambda[static_cast<size_t>(2 * j - 1)], rm2) != 0) evens_ok = false;
  }
  d.witnesses.push_back({"even-position entries of lambda divisible by r - 2", evens_ok});

  bool last_ok = true;
  if (c.kappa % 2 == 0)
    last_ok = pos_mod(c.lambda[static_cast<size_t>(c.kappa - 1)], rm2) == 1;
  d.witnesses.push_back({"last entry of lambda congruent to 1 mod r - 2 when kappa is even",
                         last_ok});

  if (shift_ok && evens_ok && last_ok) {
    d.resolvable = true;
    d.branch = Branch::CON2;
  } else {
    d.resolvable = false;
    d.branch = Branch::FAIL_CONGRUENCE;
  }
  return d;
}

OneParamDecision decide_one_param(Int r, Int l) {
  if (r < 4) throw std::invalid_argument("dimension r must be at least 4");
  if (l < r) throw std::invalid_argument("order l must be at least r");
  OneParamDecision d;
  Int rem = l % (r - 1);
  d.resolvable = (rem == 0 || rem == 1);
  if (d.resolvable) d.dims = one_param_dims(r, l);
  return d;
}

std::vector<Int> one_param_dims(Int r, Int l) {
  if (r < 4) throw std::invalid_argument("dimension r must be at least 4");
  if (l < r) throw std::invalid_argument("order l must be at least r");
  Int rem = l % (r - 1);
  if (rem != 0 && rem != 1)
    throw std::invalid_argument("type has no crepant full resolution");
  std::vector<Int> dims;
  dims.push_back(1);
  for (Int i = 1; i <= r - 2; ++i) dims.push_back(l / (r - 1));
  dims.push_back((l - 1) / (r - 1));
  return dims;
}

BruteDecision decide_bruteforce(const QuotientType& t, long long guard) {
  if (t.r() < 4) throw std::invalid_argument("brute-force decision requires r >= 4");
  if (!is_gorenstein(t)) throw std::invalid_argument("brute-force decision requires a Gorenstein type");
  if (!is_small(t)) throw std::invalid_argument("brute-force decision requires a small type");

  BruteDecision d;
  d.hilbert_all_junior = hilbert_basis_all_junior(t, guard);

  std::map<Int, Int> mult;
  for (Int w : t.weights) mult[w] += 1;
  Int top = 0;
  for (const auto& kv : mult) top = std::max(top, kv.second);
  d.iff_applicable = top >= t.r() - 2;

  if (!d.hilbert_all_junior)
    d.verdict = BruteVerdict::NOT_RESOLVABLE;
  else if (d.iff_applicable)
    d.verdict = BruteVerdict::RESOLVABLE;
  else
    d.verdict = BruteVerdict::NECESSARY_ONLY;
  return d;
}

ReducedConeParams reduced_cone_params(const TwoParamType& t) {
  if (weight_gcd(t) != 1)
    throw std::invalid_argument("reduced cone parameters require gcd(alpha, beta, l) = 1");
  CharNumbers c = characteristic_numbers(t);
  ReducedConeParams out;
  out.q = c.q;
  Int rm2 = t.r - 2;
  out.has_p = pos_mod(c.t1, rm2) == 1 && pos_mod(c.t2, rm2) == 1;
  if (out.has_p) {
    out.p = c.p;
    out.rho = c.p == 0 ? 0 : static_cast<Int>(negreg_expand(c.q, c.q - c.p).entries.size());
  }
  return out;
}

Int reduced_cone_multiplicity(const TwoParamType& t) {
  if (mu(t) == 1)
    throw std::invalid_argument("reduced cone multiplicity requires mu != 1");
  Int g = weight_gcd(t);
  Int rm2 = t.r - 2;
  Int t1 = gcd_ll(t.alpha, t.l);
  Int t2 = gcd_ll(t.beta, t.l);
  Int num = pos_mod(t1, rm2) * pos_mod(t2, rm2) * (t.l / g);
  Int den = t1 * t2;
  if (num % den != 0) throw std::logic_error("multiplicity is not integral");
  return num / den;
}

}  // namespace crepant
