#include "crepant/ehrhart.hpp"

#include <stdexcept>

namespace crepant {

namespace {

BigInt rational_to_int(const Rational& x, const char* what) {
  if (denominator(x) != 1) throw std::logic_error(std::string(what) + " is not an integer");
  return numerator(x);
}

Rational big(const BigInt& b) { return Rational(b); }

}  // namespace

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Poly poly_scale(const Poly& a, const Rational& s) {
  Poly out = a;
  for (Rational& c : out) c *= s;
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Rational poly_eval(const Poly& a, const Rational& x) {
  Rational acc(0);
  for (size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
  return acc;
}

Poly binomial_nu_minus_one(Int j) {
  if (j < 0) throw std::invalid_argument("negative binomial index");
  Poly out{Rational(1)};
  for (Int k = 1; k <= j; ++k) {
    // Multiply by (nu - k)/k.
    Poly factor{Rational(-k), Rational(1)};
    out = poly_scale(poly_mul(out, factor), Rational(1, k));
  }
  return out;
}

BigInt stirling_first(Int d, Int xi) {
  if (d < 0 || xi < 0 || xi > d) return 0;
  std::vector<std::vector<BigInt>> s(static_cast<size_t>(d) + 1,
                                     std::vector<BigInt>(static_cast<size_t>(d) + 1, 0));
  s[0][0] = 1;
  for (Int n = 0; n < d; ++n)
    for (Int k = 0; k <= n; ++k) {
      if (s[n][k] == 0) continue;
      s[n + 1][k + 1] += s[n][k];
      s[n + 1][k] -= n * s[n][k];
    }
  return s[static_cast<size_t>(d)][static_cast<size_t>(xi)];
}

TransferMatrix transfer_matrix(Int d) {
  if (d < 0) throw std::invalid_argument("negative degree");
  TransferMatrix t;
  t.d = d;
  BigInt dfact = 1;
  for (Int k = 2; k <= d; ++k) dfact *= k;
  t.m.assign(static_cast<size_t>(d) + 1,
             std::vector<Rational>(static_cast<size_t>(d) + 1, Rational(0)));
  for (Int i = 0; i <= d; ++i)
    for (Int j = 0; j <= d; ++j) {
      BigInt acc = 0;
      for (Int xi = i; xi <= d; ++xi) {
        BigInt pw = 1;
        for (Int e = 0; e < xi - i; ++e) pw *= (d - j);
        acc += stirling_first(d, xi) * binomial(xi, i) * pw;
      }
      t.m[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rational(acc, dfact);
    }
  return t;
}

Poly ehrhart_from_delta(const std::vector<BigInt>& delta) {
  if (delta.empty()) throw std::invalid_argument("empty delta vector");
  Int d = static_cast<Int>(delta.size()) - 1;
  TransferMatrix t = transfer_matrix(d);
  Poly out(delta.size(), Rational(0));
  for (size_t i = 0; i < delta.size(); ++i)
    for (size_t j = 0; j < delta.size(); ++j)
      out[i] += t.m[i][j] * big(delta[j]);
  return out;
}

std::vector<BigInt> delta_from_ehrhart(const Poly& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("empty coefficient vector");
  Int d = static_cast<Int>(coeffs.size()) - 1;
  TransferMatrix t = transfer_matrix(d);
  size_t n = coeffs.size();
  // Gaussian elimination on [m | coeffs].
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(n + 1, Rational(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = t.m[i][j];
    aug[i][n] = coeffs[i];
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && aug[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("transfer matrix is singular");
    std::swap(aug[piv], aug[col]);
    Rational lead = aug[col][col];
    for (size_t j = col; j <= n; ++j) aug[col][j] /= lead;
    for (size_t row = 0; row < n; ++row) {
      if (row == col || aug[row][col] == 0) continue;
      Rational f = aug[row][col];
      for (size_t j = col; j <= n; ++j) aug[row][j] -= f * aug[col][j];
    }
  }
  std::vector<BigInt> delta;
  for (size_t i = 0; i < n; ++i) {
    Rational v = aug[i][n];
    if (denominator(v) != 1 || numerator(v) < 0)
      throw std::invalid_argument("coefficients do not come from a lattice polytope");
    delta.push_back(numerator(v));
  }
  return delta;
}

PolygonGeom polygon_geom(const PolygonQG& poly) {
  PolygonGeom g;
  g.f0 = static_cast<Int>(poly.points.size());
  g.boundary = static_cast<Int>(poly.boundary.size());
  // Shoelace over the hull.
  BigInt twice_area = 0;
  size_t n = poly.hull.size();
  for (size_t i = 0; i < n; ++i) {
    Vec2 a = poly.hull[i], b = poly.hull[(i + 1) % n];
    twice_area += BigInt(a.x) * b.y - BigInt(a.y) * b.x;
  }
  if (twice_area < 0) twice_area = -twice_area;
  g.vol = Rational(twice_area, 2);
  g.f1 = rational_to_int(Rational(3) * g.vol + Rational(g.boundary, 2), "edge count");
  g.f2 = rational_to_int(Rational(2) * g.vol, "triangle count");
  return g;
}

Poly pick_polynomial(const PolygonGeom& g) {
  return {Rational(1), Rational(g.boundary, 2), g.vol};
}

namespace {

// Face counts of the join of an (i-1)-simplex with the maximal triangulation,
// indexed by face dimension j.
BigInt join_face_count(Int i, Int j, const PolygonGeom& g) {
  return binomial(i, j + 1) + g.f0 * binomial(i, j) + g.f1 * binomial(i, j - 1) +
         g.f2 * binomial(i, j - 2);
}

BigInt chain_face_count(Int i, Int j, Int rho) {
  return binomial(i, j + 1) + (rho + 2) * binomial(i, j) + (rho + 1) * binomial(i, j - 1);
}

}  // namespace

BigInt bpoly(Int i, Int nu, const PolygonGeom& g) {
  BigInt acc = 0;
  for (Int j = 0; j <= i + 2; ++j) acc += binomial(nu - 1, j) * join_face_count(i, j, g);
  return acc;
}

Poly bpoly_sym(Int i, const PolygonGeom& g) {
  Poly acc{Rational(0)};
  for (Int j = 0; j <= i + 2; ++j)
    acc = poly_add(acc, poly_scale(binomial_nu_minus_one(j), big(join_face_count(i, j, g))));
  return acc;
}

BigInt dpoly(Int i, Int nu, Int rho) {
  BigInt acc = 0;
  for (Int j = 0; j <= i + 1; ++j) acc += binomial(nu - 1, j) * chain_face_count(i, j, rho);
  return acc;
}

Poly dpoly_sym(Int i, Int rho) {
  Poly acc{Rational(0)};
  for (Int j = 0; j <= i + 1; ++j)
    acc = poly_add(acc, poly_scale(binomial_nu_minus_one(j), big(chain_face_count(i, j, rho))));
  return acc;
}

Poly ehrhart_junior(const TwoParamType& t) {
  if (!decide_two_param(t).resolvable)
    throw std::invalid_argument("type has no crepant full resolution");
  PolygonQG poly = build_polygon(t);
  PolygonGeom geom = polygon_geom(poly);
  Int r = t.r;
  Int rho = poly.rho();

  Poly ehr{Rational(0)};
  for (Int i = 1; i <= r - 3; ++i) {
    Rational sgn((r - 3 - i) % 2 == 0 ? 1 : -1);
    ehr = poly_add(ehr, poly_scale(bpoly_sym(i, geom), sgn * big(binomial(r - 2, i))));
  }
  Rational sgn3((r - 3) % 2 == 0 ? 1 : -1);
  ehr = poly_add(ehr, poly_scale(pick_polynomial(geom), sgn3));

  if (poly.mu != 1) {
    for (Int i = 1; i <= r - 2; ++i) {
      Rational sgn((r - 2 - i) % 2 == 0 ? 1 : -1);
      ehr = poly_add(ehr, poly_scale(dpoly_sym(i, rho), sgn * big(binomial(r - 2, i))));
    }
    Rational sgn2((r - 2) % 2 == 0 ? 1 : -1);
    ehr = poly_add(ehr, poly_scale(Poly{Rational(1), Rational(rho + 1)}, sgn2));
  }

  ehr.resize(static_cast<size_t>(r), Rational(0));
  return ehr;
}

std::vector<BigInt> cohomology_dims(const TwoParamType& t) {
  return delta_from_ehrhart(ehrhart_junior(t));
}

std::vector<BigInt> cohomology_dims_one_param(Int r, Int l) {
  std::vector<BigInt> out;
  for (Int d : one_param_dims(r, l)) out.push_back(d);
  return out;
}

}  // namespace crepant
