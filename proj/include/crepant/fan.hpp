#pragma once

#include <array>
#include <string>
#include <vector>

#include "crepant/cone2d.hpp"
#include "crepant/criterion.hpp"
#include "crepant/numeric.hpp"

namespace crepant {

// Planar model of the junior slice of a two-parameter type. Coordinates
// (x, y) correspond to the lattice point y*g + (1-x)*e_{r-1} + (x-y)*e_r,
// so e_{r-1} maps to (0,0), e_r to (1,0) and the generator to (1,1).
struct PolygonQG {
  TwoParamType type;
  Int mu = 1;
  std::vector<Vec2> points;    // all lattice points, sorted lexicographically
  std::vector<Vec2> hull;      // hull vertices, counterclockwise from (0,0)
  std::vector<Vec2> boundary;  // all boundary lattice points, ccw from (0,0)
  std::vector<Vec2> chain;     // w_0..w_{rho+1} when mu != 1, else empty
  Int apex_num_x = 0;          // apex ((alpha+r-2)/(r-2), l/(r-2))
  Int apex_num_y = 0;
  Int apex_den = 1;
  Int rho() const { return chain.empty() ? 0 : static_cast<Int>(chain.size()) - 2; }
};

PolygonQG build_polygon(const TwoParamType& t);

// Lifts a planar point to the r-dimensional quotient lattice, scaled by l.
ScaledPoint lift_point(const PolygonQG& poly, Vec2 v);

// Triangles as index triples into poly.points. Every lattice point is a
// vertex, so each triangle has normalized area one.
std::vector<std::array<int, 3>> triangulate_polygon_max(const PolygonQG& poly);

// Simplicial fan whose maximal cones are joins of planar triangles with
// coordinate rays, plus the chain cones when mu != 1.
struct JuniorFan {
  TwoParamType type;
  std::vector<ScaledPoint> generators;         // scaled by l
  std::vector<std::vector<int>> maximal_cones; // r generator indices each
};

// Requires the type to be resolvable.
JuniorFan build_join_fan(const TwoParamType& t);

JuniorFan build_join_fan(const PolygonQG& poly,
                         const std::vector<std::array<int, 3>>& triangles);

struct FanReport {
  bool basic = true;       // every cone has |det| = l^(r-1) in scaled coords
  bool crepant = true;     // every generator has coordinate sum l
  bool covering = true;    // |det| over all cones sums to l^r
  bool compatible = true;  // cones sharing a facet lie on opposite sides
  Int cone_count = 0;
  std::string failure;
};

FanReport verify_fan(const JuniorFan& fan);

// Cap triangles over the chain: true when every triangle
// conv(u_{i-1}, u_i, apex) has normalized area 1/mu in the extended lattice.
bool cap_triangles_unimodular(const PolygonQG& poly);

// Hilbert basis of the full r-dimensional cone over the junior slice with
// apex ray adjoined, reduced to the three-dimensional sublattice spanned by
// the last two coordinates and the generator. Returns true when the basis
// is exactly the generator ray plus the planar lattice points.
bool central_cone_basis_matches(const TwoParamType& t);

}  // namespace crepant
