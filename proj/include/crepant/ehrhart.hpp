#pragma once

#include <vector>

#include "crepant/criterion.hpp"
#include "crepant/fan.hpp"
#include "crepant/numeric.hpp"

namespace crepant {

// Polynomial with exact rational coefficients, coeffs[k] is the nu^k term.
using Poly = std::vector<Rational>;

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rational& s);
Poly poly_mul(const Poly& a, const Poly& b);
Rational poly_eval(const Poly& a, const Rational& x);

// Binomial coefficient C(nu - 1, j) as a polynomial in nu.
Poly binomial_nu_minus_one(Int j);

// Signed Stirling number of the first kind s(d, xi).
BigInt stirling_first(Int d, Int xi);

// Matrix with coeffs = m * delta for an Ehrhart polynomial of degree d;
// m[i][j] multiplies delta_j in the row for the nu^i coefficient.
struct TransferMatrix {
  Int d = 0;
  std::vector<std::vector<Rational>> m;
};

TransferMatrix transfer_matrix(Int d);

// Coefficients a_0..a_d from a delta vector.
Poly ehrhart_from_delta(const std::vector<BigInt>& delta);

// Delta vector from coefficients; throws unless all entries are nonnegative
// integers.
std::vector<BigInt> delta_from_ehrhart(const Poly& coeffs);

// Face counts of the maximal triangulation of the planar polygon.
struct PolygonGeom {
  BigInt f0 = 0;   // lattice points
  BigInt f1 = 0;   // edges
  BigInt f2 = 0;   // triangles
  Rational vol;    // euclidean area
  BigInt boundary = 0;
};

PolygonGeom polygon_geom(const PolygonQG& poly);

// Lattice point counter of the polygon as a polynomial in nu.
Poly pick_polynomial(const PolygonGeom& g);

// Join counters used by the junior Ehrhart formula, as values and as
// polynomials in nu.
BigInt bpoly(Int i, Int nu, const PolygonGeom& g);
Poly bpoly_sym(Int i, const PolygonGeom& g);
BigInt dpoly(Int i, Int nu, Int rho);
Poly dpoly_sym(Int i, Int rho);

// Ehrhart polynomial of the junior simplex of a resolvable two-parameter
// type, degree r - 1.
Poly ehrhart_junior(const TwoParamType& t);

// Delta vector of the junior simplex, equal to the cohomology dimensions of
// a crepant full resolution. Requires the type to be resolvable.
std::vector<BigInt> cohomology_dims(const TwoParamType& t);

// Same for a resolvable one-parameter type 1/l(1,...,1,l-(r-1)).
std::vector<BigInt> cohomology_dims_one_param(Int r, Int l);

}  // namespace crepant
