#include "crepant/cone2d.hpp"

#include <stdexcept>

namespace crepant {

namespace {

bool is_primitive(Vec2 v) {
  if (v.x == 0 && v.y == 0) return false;
  return gcd_ll(v.x, v.y) == 1;
}

// Extended Euclid: returns (g, s, t) with s*a + t*b = g.
struct Egcd {
  Int g, s, t;
};

Egcd egcd(Int a, Int b) {
  if (b == 0) return {a >= 0 ? a : -a, a >= 0 ? 1 : -1, 0};
  Egcd e = egcd(b, a % b);
  return {e.g, e.t, e.s - (a / b) * e.t};
}

void check_pq(Int p, Int q) {
  if (q < 1 || p < 0 || p >= q) throw std::invalid_argument("(p, q) requires 0 <= p < q");
  if (p == 0 && q != 1) throw std::invalid_argument("(p, q) requires q = 1 when p = 0");
  if (p > 0 && gcd_ll(p, q) != 1) throw std::invalid_argument("(p, q) requires gcd(p, q) = 1");
}

}  // namespace

PqCone make_pq_cone(Int p, Int q) {
  check_pq(p, q);
  PqCone c;
  c.p = p;
  c.q = q;
  c.y1 = {1, 0};
  c.y2 = {0, 1};
  return c;
}

PqCone pq_normal_form(Vec2 n1, Vec2 n2) {
  if (!is_primitive(n1) || !is_primitive(n2))
    throw std::invalid_argument("generators must be primitive");
  Int d = cross(n1, n2);
  if (d == 0) throw std::invalid_argument("generators must not be parallel");

  // Complete n1 to a basis: cross(n1, y2) = 1.
  Egcd e = egcd(n1.x, n1.y);
  Vec2 y2{-e.t, e.s};
  // Coordinates of n2 in the basis (n1, y2): n2 = p0*n1 + q*y2.
  Int q = cross(n1, n2);
  Int p0 = cross(n2, y2);
  if (q < 0) {
    y2 = {-y2.x, -y2.y};
    q = -q;
  }
  // Shift p0 into [0, q).
  Int t = floor_div(p0, q);
  PqCone c;
  c.p = p0 - t * q;
  c.q = q;
  c.y1 = n1;
  c.y2 = y2 + n1 * t;
  if (c.n2() != n2 || c.p < 0 || c.p >= c.q)
    throw std::logic_error("normal form construction failed");
  check_pq(c.p, c.q);
  return c;
}

Vec2 to_ambient(const PqCone& c, Vec2 v) { return c.y1 * v.x + c.y2 * v.y; }

Vec2 from_ambient(const PqCone& c, Vec2 v) {
  Int det = cross(c.y1, c.y2);
  Vec2 out{cross(v, c.y2) / det, cross(c.y1, v) / det};
  if (to_ambient(c, out) != v) throw std::invalid_argument("point not in the lattice");
  return out;
}

Int multiplicity(const PqCone& c) { return c.q; }

Int socius(Int p, Int q) {
  check_pq(p, q);
  if (p == 0) throw std::invalid_argument("socius requires p >= 1");
  Egcd e = egcd(p, q);
  Int pp = pos_mod(e.s, q);
  if (pos_mod(pp * p, q) != 1 % q) throw std::logic_error("socius inverse check failed");
  // Voronoi's sum formula, as a cross-check on moderate inputs.
  if (q <= 1000000) {
    Int sum = 0;
    for (Int j = 1; j < p; ++j) {
      Int f = (j * q) / p;
      sum = pos_mod(sum + f * f, q);
    }
    Int vor = pos_mod(3 - 2 * p + 6 * sum, q);
    if (vor != pp) throw std::logic_error("socius formulas disagree");
  }
  return pp;
}

bool cones_isomorphic(const PqCone& a, const PqCone& b) {
  if (a.q != b.q) return false;
  if (a.p == b.p) return true;
  return a.p == socius(b.p, b.q);
}

PqCone dual_cone(const PqCone& c) {
  Vec2 n1 = c.n1(), n2 = c.n2();
  Int d = cross(n1, n2);
  // Facet normals: m1 vanishes on n1, m2 vanishes on n2, both nonnegative
  // on the cone.
  Vec2 m1, m2;
  if (d > 0) {
    m1 = {-n1.y, n1.x};
    m2 = {n2.y, -n2.x};
  } else {
    m1 = {n1.y, -n1.x};
    m2 = {-n2.y, n2.x};
  }
  PqCone dual = pq_normal_form(m1, m2);
  Int expect = (c.q == 1) ? 0 : c.q - c.p;
  if (dual.q != c.q || dual.p != expect) throw std::logic_error("dual cone parameter check failed");
  return dual;
}

BoundaryPoints boundary_points(const PqCone& c) {
  if (c.q < 2) throw std::invalid_argument("boundary_points requires q >= 2");
  BoundaryPoints out;
  out.negreg = negreg_expand(c.q, c.q - c.p);
  NegConvergentTable t = convergents(out.negreg);
  Int rho = static_cast<Int>(out.negreg.entries.size());
  for (Int j = 0; j <= rho + 1; ++j) {
    Int r = t.r_at(j - 1), s = t.s_at(j - 1);
    out.points.push_back({r - s, r});
    bool vertex = (j == 0 || j == rho + 1) ? true : out.negreg.entries[j - 1] >= 3;
    out.vertex_flags.push_back(vertex);
  }
  if (out.points.front() != Vec2{1, 0} || out.points.back() != Vec2{c.p, c.q})
    throw std::logic_error("boundary endpoint check failed");
  return out;
}

HullVertices hull_vertices(const PqCone& c) {
  if (c.q < 2) throw std::invalid_argument("hull_vertices requires q >= 2");
  HullVertices out;
  out.primal_cf = regular_expand(c.q, c.p);
  out.dual_cf = regular_expand(c.q, c.q - c.p);

  // v_i = Q_{i-1} y1 + P_{i-1} y2; vertices are v_0, the even-index v_{2i}
  // and the last point v_{k+1}.
  auto vertex_list = [](const RegularCF& cf) {
    ConvergentTable t = convergents(cf);
    Int k = static_cast<Int>(cf.entries.size());
    std::vector<Vec2> v;
    v.push_back({t.q_at(-1), t.p_at(-1)});
    for (Int i = 2; i <= k; i += 2) v.push_back({t.q_at(i - 1), t.p_at(i - 1)});
    v.push_back({t.q_at(k), t.p_at(k)});
    return v;
  };
  out.primal = vertex_list(out.primal_cf);
  out.dual = vertex_list(out.dual_cf);
  if (out.primal.front() != Vec2{1, 0} || out.primal.back() != Vec2{c.p, c.q})
    throw std::logic_error("hull vertex endpoint check failed");
  return out;
}

std::vector<Vec2> hilbert_basis_2d(const PqCone& c) {
  if (c.q == 1) return {{1, 0}, {0, 1}};
  return boundary_points(c).points;
}

}  // namespace crepant
