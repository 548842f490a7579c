#pragma once

#include <vector>

#include "crepant/cfrac.hpp"
#include "crepant/numeric.hpp"

namespace crepant {

struct Vec2 {
  Int x = 0;
  Int y = 0;
  friend bool operator==(const Vec2&, const Vec2&) = default;
  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(Int s) const { return {x * s, y * s}; }
};

inline Int cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

// Two-dimensional rational cone pos(n1, n2) in normal form: an adapted basis
// (y1, y2) with n1 = y1 and n2 = p*y1 + q*y2, 0 <= p < q or (p, q) = (0, 1),
// gcd(p, q) = 1. Columns of the basis are in caller coordinates.
struct PqCone {
  Int p = 0;
  Int q = 1;
  Vec2 y1{1, 0};
  Vec2 y2{0, 1};
  Vec2 n1() const { return y1; }
  Vec2 n2() const { return y1 * p + y2 * q; }
};

// Builds the normal form from primitive, non-parallel generators.
PqCone pq_normal_form(Vec2 n1, Vec2 n2);

// Convenience constructor with the identity adapted basis.
PqCone make_pq_cone(Int p, Int q);

// Maps adapted coordinates to caller coordinates and back.
Vec2 to_ambient(const PqCone& c, Vec2 v);
Vec2 from_ambient(const PqCone& c, Vec2 v);

// Multiplicity of the cone, equal to q.
Int multiplicity(const PqCone& c);

// Inverse of p modulo q for 1 <= p < q, gcd(p, q) = 1.
Int socius(Int p, Int q);

// Isomorphism of (p1, q1)- and (p2, q2)-cones as lattice cones.
bool cones_isomorphic(const PqCone& a, const PqCone& b);

// Dual cone, a (q-p, q)-cone with its own adapted basis in dual coordinates.
PqCone dual_cone(const PqCone& c);

// Lattice points on the bounded part of the boundary of the convex hull of
// the nonzero lattice points of the cone, ordered from n1 to n2.
// Adapted coordinates. vertex_flags marks the hull vertices among them.
struct BoundaryPoints {
  std::vector<Vec2> points;
  std::vector<bool> vertex_flags;
  NegRegCF negreg;  // expansion of q/(q-p) that drives the recurrence
};

// Requires q >= 2.
BoundaryPoints boundary_points(const PqCone& c);

// Hull vertices computed from the regular expansion of q/p, together with
// the matching data for the dual cone. Adapted coordinates on each side.
struct HullVertices {
  std::vector<Vec2> primal;
  std::vector<Vec2> dual;
  RegularCF primal_cf;  // q/p
  RegularCF dual_cf;    // q/(q-p)
};

// Requires q >= 2.
HullVertices hull_vertices(const PqCone& c);

// Hilbert basis of the cone in adapted coordinates: the boundary points for
// q >= 2, or both generators for q = 1.
std::vector<Vec2> hilbert_basis_2d(const PqCone& c);

}  // namespace crepant
