#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "crepant/cfrac.hpp"
#include "crepant/criterion.hpp"
#include "crepant/fan.hpp"
#include "oracles.hpp"

using namespace crepant;

namespace {

// Visits every (alpha, beta) pair with alpha <= beta for each order.
template <typename F>
void for_each_two_param(Int r, Int lmax, F&& f) {
  for (Int l = r; l <= lmax; ++l)
    for (Int alpha = 1; 2 * alpha <= l - (r - 2); ++alpha)
      f(make_two_param(r, l, alpha, l - (r - 2) - alpha));
}

Int pow_int(Int base, Int e) {
  Int out = 1;
  while (e-- > 0) out *= base;
  return out;
}

}  // namespace

TEST_CASE("two-parameter type validation") {
  CHECK_THROWS(make_two_param(3, 10, 4, 4));
  CHECK_THROWS(make_two_param(4, 3, 1, 1));
  CHECK_THROWS(make_two_param(4, 10, 0, 8));
  CHECK_THROWS(make_two_param(4, 10, 3, 4));
  TwoParamType t = make_two_param(4, 11, 3, 6);
  CHECK(to_quotient(t).weights == std::vector<Int>{1, 1, 3, 6});
  CHECK(is_gorenstein(to_quotient(t)));
  CHECK(weight_gcd(t) == 1);
  CHECK(mu(t) == 2);
  CHECK(weight_gcd(make_two_param(4, 8, 2, 4)) == 2);
  CHECK(mu(make_two_param(4, 8, 2, 4)) == 1);
}

TEST_CASE("weight gcd divides r - 2 and mu matches") {
  for (Int r = 4; r <= 7; ++r)
    for_each_two_param(r, 40, [&](const TwoParamType& t) {
      Int g = weight_gcd(t);
      CHECK((t.r - 2) % g == 0);
      CHECK(mu(t) * g == t.r - 2);
      CHECK(is_gorenstein(to_quotient(t)));
      CHECK(is_small(to_quotient(t)));
    });
}

TEST_CASE("characteristic number fixtures") {
  CharNumbers a = characteristic_numbers(make_two_param(4, 11, 3, 6));
  CHECK(a.t1 == 1);
  CHECK(a.t2 == 1);
  CHECK(a.z1 == 11);
  CHECK(a.z2 == 5);
  CHECK(a.c1 == -4);
  CHECK(a.c2 == 9);
  CHECK(a.p_breve == -17);
  CHECK(a.q == 11);
  CHECK(a.p == 5);
  CHECK(a.lambda == std::vector<Int>{2, 5});
  CHECK(a.kappa == 2);

  CharNumbers b = characteristic_numbers(make_two_param(4, 12, 5, 5));
  CHECK(b.z1 == 12);
  CHECK(b.z2 == 7);
  CHECK(b.c1 == -4);
  CHECK(b.c2 == 7);
  CHECK(b.p_breve == -13);
  CHECK(b.q == 12);
  CHECK(b.p == 11);
  CHECK(b.lambda == std::vector<Int>{1, 11});

  CharNumbers c = characteristic_numbers(make_two_param(5, 28, 4, 21));
  CHECK(c.t1 == 4);
  CHECK(c.t2 == 7);
  CHECK(c.q == 1);
  CHECK(c.p == 0);
  CHECK(c.kappa == 0);
  CHECK(c.lambda.empty());

  // z2 = 1 corner: the Bezout pair degenerates to (-1, z1 + 1).
  CharNumbers d = characteristic_numbers(make_two_param(4, 9, 1, 6));
  CHECK(d.t2 == 3);
  CHECK(d.z1 == 3);
  CHECK(d.z2 == 1);
  CHECK(d.c1 == -1);
  CHECK(d.c2 == 4);
  CHECK(d.p_breve == -5);
  CHECK(d.q == 3);
  CHECK(d.p == 1);
  CHECK(d.lambda == std::vector<Int>{3});

  CHECK_THROWS(characteristic_numbers(make_two_param(4, 8, 2, 4)));
}

TEST_CASE("scaled family fixtures") {
  // 1/4x(1,1,2x-1,2x-1) has q = 4x, p = 4x - 1.
  for (Int xi = 1; xi <= 10; ++xi) {
    TwoParamType t = make_two_param(4, 4 * xi, 2 * xi - 1, 2 * xi - 1);
    CharNumbers c = characteristic_numbers(t);
    CHECK(c.c1 == -(xi + 1));
    CHECK(c.c2 == 2 * xi + 1);
    CHECK(c.p_breve == -(4 * xi + 1));
    CHECK(c.q == 4 * xi);
    CHECK(c.p == 4 * xi - 1);
    CHECK(c.lambda == std::vector<Int>{1, 4 * xi - 1});
    Decision dec = decide_two_param(t);
    CHECK(dec.resolvable);
    CHECK(dec.branch == Branch::CON2);
    CHECK(reduced_cone_params(t).rho == 1);
  }

  // Isolated series 1/(2(r-1)^i + r-2)(1,...,1,(r-1)^i,(r-1)^i).
  for (Int r = 4; r <= 6; ++r)
    for (Int i = 1; i <= 3; ++i) {
      Int a = pow_int(r - 1, i);
      Int l = 2 * a + r - 2;
      TwoParamType t = make_two_param(r, l, a, a);
      CHECK(splitting_codim(to_quotient(t)).isolated);
      CharNumbers c = characteristic_numbers(t);
      CHECK(c.q == l);
      CHECK(c.p == l - 1);
      CHECK(c.lambda == std::vector<Int>{1, l - 1});
      Decision dec = decide_two_param(t);
      CHECK(dec.resolvable);
      CHECK(dec.branch == Branch::CON2);
    }

  // 1/((x+x'+1)(r-2))(1,...,1,x(r-2),x'(r-2)) with coprime x, x'.
  for (Int r = 4; r <= 6; ++r)
    for (Int x = 1; x <= 5; ++x)
      for (Int y = x; y <= 5; ++y) {
        if (gcd_ll(x, y) != 1) continue;
        Int l = (x + y + 1) * (r - 2);
        TwoParamType t = make_two_param(r, l, x * (r - 2), y * (r - 2));
        CHECK(weight_gcd(t) == r - 2);
        Decision dec = decide_two_param(t);
        CHECK(dec.resolvable);
        CHECK(dec.branch == Branch::CON1);
        CHECK(dec.mu == 1);
      }
}

TEST_CASE("decision fixtures cover every branch") {
  Decision a = decide_two_param(make_two_param(4, 11, 3, 6));
  CHECK(a.resolvable);
  CHECK(a.branch == Branch::CON2);
  CHECK(a.mu == 2);
  REQUIRE(a.chars.has_value());
  CHECK(a.chars->p == 5);

  Decision b = decide_two_param(make_two_param(4, 11, 4, 5));
  CHECK_FALSE(b.resolvable);
  CHECK(b.branch == Branch::FAIL_CONGRUENCE);
  REQUIRE(b.chars.has_value());
  CHECK(b.chars->p == 8);
  CHECK(b.chars->lambda == std::vector<Int>{1, 2, 1, 2});

  Decision c = decide_two_param(make_two_param(4, 8, 2, 4));
  CHECK(c.resolvable);
  CHECK(c.branch == Branch::CON1);
  CHECK_FALSE(c.chars.has_value());

  Decision d = decide_two_param(make_two_param(5, 28, 4, 21));
  CHECK(d.resolvable);
  CHECK(d.branch == Branch::CON2_P0);
  CHECK(d.mu == 3);

  // gcd(alpha, beta, l) a proper divisor of r - 2 fails outright.
  Decision e = decide_two_param(make_two_param(6, 8, 2, 2));
  CHECK_FALSE(e.resolvable);
  CHECK(e.branch == Branch::FAIL_GCD);
  CHECK_FALSE(e.chars.has_value());
  CHECK(e.mu == 2);

  // gcd 1 but t1 = 2 not congruent to 1 mod 3.
  Decision f = decide_two_param(make_two_param(5, 8, 2, 3));
  CHECK_FALSE(f.resolvable);
  CHECK(f.branch == Branch::FAIL_T);
  REQUIRE(f.chars.has_value());
  CHECK(f.chars->t1 == 2);

  CHECK(branch_name(Branch::CON2_P0) == std::string("CON2-p0"));
  CHECK(branch_name(Branch::FAIL_CONGRUENCE) == std::string("FAIL-congruence"));
}

TEST_CASE("Bezout identity, normalization, and shift invariance") {
  for (Int r = 4; r <= 6; ++r)
    for_each_two_param(r, 80, [&](const TwoParamType& t) {
      if (weight_gcd(t) != 1) return;
      CharNumbers c = characteristic_numbers(t);
      CHECK(c.t1 == gcd_ll(t.alpha, t.l));
      CHECK(c.t2 == gcd_ll(t.alpha + t.r - 2, t.l));
      CHECK(c.c1 * c.z1 + c.c2 * c.z2 == 1);
      CHECK(c.c1 < 0);
      CHECK(c.c2 > 0);
      if (c.z2 > 1) CHECK(c.c2 < c.z1);
      CHECK(c.q * c.t1 * c.t2 == t.l);
      CHECK(c.p == pos_mod(c.p_breve, c.q));
      if (c.p != 0) {
        auto [num, den] = oracle::eval_regular(c.lambda);
        CHECK(num == c.q);
        CHECK(den == c.p);
      }
      // Any other Bezout representative shifts p_breve by (r-2)q steps.
      for (Int k = -3; k <= 3; ++k) {
        Int c1s = c.c1 + k * c.z2;
        Int c2s = c.c2 - k * c.z1;
        CHECK(c1s * c.z1 + c2s * c.z2 == 1);
        Int pb = (c1s * t.l + c2s * t.alpha) / c.t1;
        CHECK((c1s * t.l + c2s * t.alpha) % c.t1 == 0);
        CHECK((pb - c.p_breve) % ((t.r - 2) * c.q) == 0);
        CHECK(pos_mod(pb, c.q) == c.p);
      }
    });
}

TEST_CASE("decision is symmetric in the two weights") {
  for (Int r = 4; r <= 5; ++r)
    for_each_two_param(r, 60, [&](const TwoParamType& t) {
      TwoParamType s = make_two_param(t.r, t.l, t.beta, t.alpha);
      Decision dt = decide_two_param(t);
      Decision ds = decide_two_param(s);
      CHECK(dt.resolvable == ds.resolvable);
      CHECK(dt.mu == ds.mu);
      CHECK(dt.branch == ds.branch);
      if (dt.chars && ds.chars) CHECK(dt.chars->q == ds.chars->q);
    });
}

TEST_CASE("arithmetic criterion agrees with the Hilbert basis oracle") {
  for_each_two_param(4, 40, [&](const TwoParamType& t) {
    CHECK(decide_two_param(t).resolvable == oracle::box_all_junior(to_quotient(t)));
  });
  for_each_two_param(5, 32, [&](const TwoParamType& t) {
    CHECK(decide_two_param(t).resolvable == oracle::box_all_junior(to_quotient(t)));
  });
}

TEST_CASE("one-parameter decision fixtures and oracle agreement") {
  OneParamDecision a = decide_one_param(4, 7);
  CHECK(a.resolvable);
  CHECK(a.dims == std::vector<Int>{1, 2, 2, 2});
  CHECK(one_param_dims(4, 7) == a.dims);

  OneParamDecision b = decide_one_param(4, 8);
  CHECK_FALSE(b.resolvable);
  CHECK(b.dims.empty());
  CHECK_THROWS(one_param_dims(4, 8));

  OneParamDecision c = decide_one_param(5, 9);
  CHECK(c.resolvable);
  CHECK(c.dims == std::vector<Int>{1, 2, 2, 2, 2});

  CHECK_THROWS(decide_one_param(3, 9));
  CHECK_THROWS(decide_one_param(4, 3));

  // Resolvable orders follow the residue; dims match the delta vector of
  // direct dilation counts.
  struct Range {
    Int r, lmax;
  };
  for (Range range : {Range{4, 32}, Range{5, 20}, Range{6, 11}}) {
    for (Int l = range.r; l <= range.lmax; ++l) {
      OneParamDecision d = decide_one_param(range.r, l);
      std::vector<Int> w(static_cast<size_t>(range.r - 1), 1);
      w.push_back(l - (range.r - 1));
      QuotientType qt = make_quotient(l, w);
      CHECK(d.resolvable == oracle::box_all_junior(qt));
      if (!d.resolvable) continue;
      std::vector<BigInt> counts;
      for (Int nu = 0; nu < range.r; ++nu)
        counts.push_back(oracle::dilation_count(qt, nu));
      std::vector<BigInt> delta = oracle::delta_from_counts(counts);
      REQUIRE(delta.size() == d.dims.size());
      for (size_t i = 0; i < delta.size(); ++i)
        CHECK(delta[i] == BigInt(d.dims[i]));
    }
  }
}

TEST_CASE("brute-force verdicts") {
  BruteDecision a = decide_bruteforce(make_quotient(11, {1, 1, 3, 6}));
  CHECK(a.verdict == BruteVerdict::RESOLVABLE);
  CHECK(a.hilbert_all_junior);
  CHECK(a.iff_applicable);

  BruteDecision b = decide_bruteforce(make_quotient(11, {1, 1, 4, 5}));
  CHECK(b.verdict == BruteVerdict::NOT_RESOLVABLE);
  CHECK_FALSE(b.hilbert_all_junior);

  BruteDecision c = decide_bruteforce(make_quotient(39, {1, 5, 8, 25}));
  CHECK(c.verdict == BruteVerdict::NECESSARY_ONLY);
  CHECK(c.hilbert_all_junior);
  CHECK_FALSE(c.iff_applicable);

  CHECK_THROWS(decide_bruteforce(make_quotient(2, {1, 1})));
  CHECK_THROWS(decide_bruteforce(make_quotient(5, {1, 1, 1, 1})));
}

TEST_CASE("reduced cone parameters") {
  ReducedConeParams a = reduced_cone_params(make_two_param(4, 11, 3, 6));
  CHECK(a.q == 11);
  CHECK(a.has_p);
  CHECK(a.p == 5);
  CHECK(a.rho == 2);

  ReducedConeParams b = reduced_cone_params(make_two_param(4, 12, 5, 5));
  CHECK(b.q == 12);
  CHECK(b.p == 11);
  CHECK(b.rho == 1);

  ReducedConeParams c = reduced_cone_params(make_two_param(5, 28, 4, 21));
  CHECK(c.q == 1);
  CHECK(c.has_p);
  CHECK(c.p == 0);
  CHECK(c.rho == 0);

  ReducedConeParams d = reduced_cone_params(make_two_param(5, 8, 2, 3));
  CHECK(d.q == 4);
  CHECK_FALSE(d.has_p);

  CHECK_THROWS(reduced_cone_params(make_two_param(4, 8, 2, 4)));
}

TEST_CASE("chain length matches the continued-fraction form when resolvable") {
  // The continued-fraction description of the chain is valid exactly under
  // the resolvability congruences; non-resolvable types break it.
  for (Int r = 4; r <= 5; ++r)
    for_each_two_param(r, 40, [&](const TwoParamType& t) {
      if (weight_gcd(t) != 1) return;
      if (!decide_two_param(t).resolvable) return;
      ReducedConeParams rc = reduced_cone_params(t);
      REQUIRE(rc.has_p);
      PolygonQG poly = build_polygon(t);
      CHECK(poly.rho() == rc.rho);
    });
}

TEST_CASE("reduced cone multiplicity formula and geometry") {
  CHECK_THROWS(reduced_cone_multiplicity(make_two_param(4, 8, 2, 4)));

  for (Int r = 4; r <= 6; ++r)
    for_each_two_param(r, 40, [&](const TwoParamType& t) {
      if (mu(t) == 1) return;
      Int m = reduced_cone_multiplicity(t);
      if (weight_gcd(t) == 1) {
        ReducedConeParams rc = reduced_cone_params(t);
        if (rc.has_p) CHECK(m == rc.q);
      }
      // Cross-check against the normalized determinant of the cone spanned
      // between the apex and the two chain endpoints.
      PolygonQG poly = build_polygon(t);
      REQUIRE(poly.chain.size() >= 2);
      Vec2 w1 = poly.chain.front();
      Vec2 w2 = poly.chain.back();
      Int rm2 = t.r - 2;
      Vec2 apex_scaled{t.alpha + rm2, t.l};
      Vec2 u = apex_scaled - w1 * rm2;
      Vec2 v = apex_scaled - w2 * rm2;
      Int det = cross(u, v);
      if (det < 0) det = -det;
      CHECK(mu(t) * det == m * rm2 * rm2);
    });
}
