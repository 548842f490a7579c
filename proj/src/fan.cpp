#include "crepant/fan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace crepant {

namespace {

// Strict convex hull, counterclockwise, starting at the lexicographic minimum.
std::vector<Vec2> strict_hull(const std::vector<Vec2>& pts) {
  std::vector<Vec2> p = pts;
  std::sort(p.begin(), p.end(), [](Vec2 a, Vec2 b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  p.erase(std::unique(p.begin(), p.end()), p.end());
  size_t n = p.size();
  if (n < 3) return p;
  std::vector<Vec2> h(2 * n);
  size_t k = 0;
  // Lower hull
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(h[k - 1] - h[k - 2], p[i] - h[k - 2]) <= 0) --k;
    h[k++] = p[i];
  }
  // Upper hull
  for (size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 1] - h[k - 2], p[i] - h[k - 2]) <= 0) --k;
    h[k++] = p[i];
  }
  h.resize(k - 1);
  return h;
}

Int det3x2(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

BigInt bigint_det(std::vector<std::vector<BigInt>> m) {
  // Bareiss fraction-free elimination.
  size_t n = m.size();
  BigInt sign = 1, prev = 1;
  for (size_t col = 0; col + 1 < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      sign = -sign;
    }
    for (size_t row = col + 1; row < n; ++row) {
      for (size_t j = col + 1; j < n; ++j)
        m[row][j] = (m[row][j] * m[col][col] - m[row][col] * m[col][j]) / prev;
      m[row][col] = 0;
    }
    prev = m[col][col];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

PolygonQG build_polygon(const TwoParamType& t) {
  PolygonQG poly;
  poly.type = t;
  poly.mu = mu(t);
  Int rm2 = t.r - 2;
  poly.apex_num_x = t.alpha + rm2;
  poly.apex_num_y = t.l;
  poly.apex_den = rm2;

  for (Int k = 0; k <= t.l / rm2; ++k) {
    Int mlo = -floor_div(k * t.alpha, t.l);
    Int mhi = 1 - k + floor_div(k * t.beta, t.l);
    for (Int m = mlo; m <= mhi; ++m) poly.points.push_back({1 - m, k});
  }
  std::sort(poly.points.begin(), poly.points.end(), [](Vec2 a, Vec2 b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  if (poly.points.size() < 3) throw std::logic_error("degenerate junior slice");
  if (!(poly.points[0] == Vec2{0, 0}) || !(poly.points[1] == Vec2{1, 0}) ||
      !(poly.points[2] == Vec2{1, 1}))
    throw std::logic_error("unexpected leading lattice points");

  poly.hull = strict_hull(poly.points);
  if (!(poly.hull.front() == Vec2{0, 0}))
    throw std::logic_error("hull does not start at the origin");

  // Boundary walk with the interior points of every edge filled in.
  size_t hn = poly.hull.size();
  for (size_t i = 0; i < hn; ++i) {
    Vec2 a = poly.hull[i];
    Vec2 b = poly.hull[(i + 1) % hn];
    Vec2 d = b - a;
    Int steps = gcd_ll(d.x < 0 ? -d.x : d.x, d.y < 0 ? -d.y : d.y);
    for (Int s = 0; s < steps; ++s)
      poly.boundary.push_back({a.x + d.x / steps * s, a.y + d.y / steps * s});
  }

  if (poly.mu != 1) {
    Int t1 = gcd_ll(t.alpha, t.l);
    Int t2 = gcd_ll(t.beta, t.l);
    Vec2 w{(t2 / rm2) * ((t.alpha + rm2) / t2), (t2 / rm2) * (t.l / t2)};
    Vec2 wp{1 + (t1 / rm2) * (t.alpha / t1), (t1 / rm2) * (t.l / t1)};
    if (w == wp) throw std::logic_error("chain endpoints coincide");
    auto find_pt = [&](Vec2 v) {
      for (size_t i = 0; i < poly.boundary.size(); ++i)
        if (poly.boundary[i] == v) return i;
      throw std::logic_error("chain endpoint is not on the boundary");
    };
    size_t iw = find_pt(w);
    size_t n = poly.boundary.size();
    // Clockwise walk from w over the cap down to w'.
    size_t j = iw;
    poly.chain.push_back(poly.boundary[j]);
    while (!(poly.boundary[j] == wp)) {
      j = (j + n - 1) % n;
      poly.chain.push_back(poly.boundary[j]);
      if (poly.chain.size() > n + 1) throw std::logic_error("chain walk did not terminate");
    }
  }
  return poly;
}

ScaledPoint lift_point(const PolygonQG& poly, Vec2 v) {
  const TwoParamType& t = poly.type;
  ScaledPoint s;
  s.scale = t.l;
  s.coords.assign(static_cast<size_t>(t.r - 2), v.y);
  s.coords.push_back(v.y * t.alpha + t.l * (1 - v.x));
  s.coords.push_back(v.y * t.beta + t.l * (v.x - v.y));
  return s;
}

std::vector<std::array<int, 3>> triangulate_polygon_max(const PolygonQG& poly) {
  const std::vector<Vec2>& pts = poly.points;
  std::map<std::pair<Int, Int>, int> index;
  for (size_t i = 0; i < pts.size(); ++i) index[{pts[i].x, pts[i].y}] = static_cast<int>(i);
  auto idx_of = [&](Vec2 v) { return index.at({v.x, v.y}); };

  std::vector<std::array<int, 3>> tris;
  auto push_tri = [&](Vec2 a, Vec2 b, Vec2 c) {
    if (cross(b - a, c - a) < 0) std::swap(b, c);
    if (cross(b - a, c - a) <= 0) throw std::logic_error("degenerate triangle");
    tris.push_back({idx_of(a), idx_of(b), idx_of(c)});
  };

  if (cross(pts[1] - pts[0], pts[2] - pts[0]) == 0)
    throw std::logic_error("leading points are collinear");
  // Insertion hull; collinear boundary points stay in the cycle.
  std::vector<Vec2> hull{pts[0], pts[1], pts[2]};
  if (cross(pts[1] - pts[0], pts[2] - pts[0]) < 0) std::swap(hull[1], hull[2]);
  push_tri(pts[0], pts[1], pts[2]);

  for (size_t next = 3; next < pts.size(); ++next) {
    Vec2 p = pts[next];
    size_t n = hull.size();
    std::vector<bool> vis(n);
    size_t vis_count = 0;
    for (size_t i = 0; i < n; ++i) {
      vis[i] = cross(hull[(i + 1) % n] - hull[i], p - hull[i]) < 0;
      if (vis[i]) ++vis_count;
    }
    if (vis_count == 0 || vis_count == n)
      throw std::logic_error("next point does not extend the hull");
    size_t start = 0;
    while (!(vis[start] && !vis[(start + n - 1) % n])) ++start;
    for (size_t i = start, seen = 0; seen < vis_count; i = (i + 1) % n, ++seen) {
      if (!vis[i]) throw std::logic_error("visible edges are not contiguous");
      push_tri(hull[i], hull[(i + 1) % n], p);
    }
    size_t stop = (start + vis_count) % n;  // first kept vertex after the arc
    std::vector<Vec2> nh;
    for (size_t i = stop;; i = (i + 1) % n) {
      nh.push_back(hull[i]);
      if (i == start) break;
    }
    nh.push_back(p);
    hull = nh;
  }
  return tris;
}

JuniorFan build_join_fan(const TwoParamType& t) {
  if (!decide_two_param(t).resolvable)
    throw std::invalid_argument("type has no crepant full resolution");
  PolygonQG poly = build_polygon(t);
  return build_join_fan(poly, triangulate_polygon_max(poly));
}

JuniorFan build_join_fan(const PolygonQG& poly,
                         const std::vector<std::array<int, 3>>& triangles) {
  const TwoParamType& t = poly.type;
  JuniorFan fan;
  fan.type = t;
  Int rm2 = t.r - 2;

  for (Vec2 v : poly.points) fan.generators.push_back(lift_point(poly, v));
  int unit_base = static_cast<int>(fan.generators.size());
  for (Int j = 0; j < rm2; ++j) {
    ScaledPoint unit;
    unit.scale = t.l;
    unit.coords.assign(static_cast<size_t>(t.r), 0);
    unit.coords[static_cast<size_t>(j)] = t.l;
    fan.generators.push_back(unit);
  }

  for (const auto& tri : triangles) {
    for (Int skip = 0; skip < rm2; ++skip) {
      std::vector<int> cone{tri[0], tri[1], tri[2]};
      for (Int j = 0; j < rm2; ++j)
        if (j != skip) cone.push_back(unit_base + static_cast<int>(j));
      std::sort(cone.begin(), cone.end());
      fan.maximal_cones.push_back(std::move(cone));
    }
  }

  if (poly.mu != 1) {
    std::map<std::pair<Int, Int>, int> index;
    for (size_t i = 0; i < poly.points.size(); ++i)
      index[{poly.points[i].x, poly.points[i].y}] = static_cast<int>(i);
    for (size_t i = 0; i + 1 < poly.chain.size(); ++i) {
      std::vector<int> cone{index.at({poly.chain[i].x, poly.chain[i].y}),
                            index.at({poly.chain[i + 1].x, poly.chain[i + 1].y})};
      for (Int j = 0; j < rm2; ++j) cone.push_back(unit_base + static_cast<int>(j));
      std::sort(cone.begin(), cone.end());
      fan.maximal_cones.push_back(std::move(cone));
    }
  }
  return fan;
}

FanReport verify_fan(const JuniorFan& fan) {
  FanReport rep;
  const TwoParamType& t = fan.type;
  size_t r = static_cast<size_t>(t.r);
  BigInt det_target = 1, sum_target = 1;
  for (size_t i = 0; i + 1 < r; ++i) det_target *= t.l;
  for (size_t i = 0; i < r; ++i) sum_target *= t.l;

  auto note = [&](bool& flag, const std::string& msg) {
    flag = false;
    if (rep.failure.empty()) rep.failure = msg;
  };

  for (size_t i = 0; i < fan.generators.size(); ++i) {
    const ScaledPoint& gptr = fan.generators[i];
    if (gptr.coords.size() != r || gptr.scale != t.l) {
      note(rep.crepant, "generator " + std::to_string(i) + " has the wrong shape");
      continue;
    }
    Int sum = 0;
    for (Int c : gptr.coords) sum += c;
    if (sum != t.l)
      note(rep.crepant, "generator " + std::to_string(i) + " is not on the junior plane");
  }

  BigInt det_sum = 0;
  for (size_t ci = 0; ci < fan.maximal_cones.size(); ++ci) {
    const std::vector<int>& cone = fan.maximal_cones[ci];
    if (cone.size() != r) {
      note(rep.basic, "cone " + std::to_string(ci) + " does not have r generators");
      continue;
    }
    std::vector<std::vector<BigInt>> m;
    for (int gi : cone) {
      std::vector<BigInt> row;
      for (Int c : fan.generators[static_cast<size_t>(gi)].coords) row.push_back(c);
      m.push_back(std::move(row));
    }
    BigInt d = bigint_det(m);
    if (d < 0) d = -d;
    det_sum += d;
    if (d != det_target)
      note(rep.basic, "cone " + std::to_string(ci) + " is not basic");
  }
  if (det_sum != sum_target)
    note(rep.covering, "cones do not partition the positive orthant");

  // Interior facets must be shared by exactly two cones sitting on opposite
  // sides.
  std::map<std::vector<int>, std::vector<std::pair<size_t, int>>> facets;
  for (size_t ci = 0; ci < fan.maximal_cones.size(); ++ci) {
    const std::vector<int>& cone = fan.maximal_cones[ci];
    for (size_t omit = 0; omit < cone.size(); ++omit) {
      std::vector<int> facet;
      for (size_t j = 0; j < cone.size(); ++j)
        if (j != omit) facet.push_back(cone[j]);
      facets[facet].push_back({ci, cone[omit]});
    }
  }
  for (const auto& entry : facets) {
    if (entry.second.size() == 1) continue;
    if (entry.second.size() > 2) {
      note(rep.compatible, "a facet is shared by more than two cones");
      continue;
    }
    std::vector<std::vector<BigInt>> base;
    for (int gi : entry.first) {
      std::vector<BigInt> row;
      for (Int c : fan.generators[static_cast<size_t>(gi)].coords) row.push_back(c);
      base.push_back(std::move(row));
    }
    BigInt side[2];
    for (int which = 0; which < 2; ++which) {
      auto m = base;
      std::vector<BigInt> row;
      for (Int c :
           fan.generators[static_cast<size_t>(entry.second[static_cast<size_t>(which)].second)]
               .coords)
        row.push_back(c);
      m.push_back(std::move(row));
      side[which] = bigint_det(m);
    }
    if (side[0] == 0 || side[1] == 0 || (side[0] < 0) == (side[1] < 0))
      note(rep.compatible, "two cones overlap across a shared facet");
  }

  rep.cone_count = static_cast<Int>(fan.maximal_cones.size());
  return rep;
}

bool cap_triangles_unimodular(const PolygonQG& poly) {
  if (poly.chain.empty()) return true;
  for (size_t i = 0; i + 1 < poly.chain.size(); ++i) {
    Vec2 a = poly.chain[i];
    Vec2 b = poly.chain[i + 1];
    Vec2 edge = b - a;
    Vec2 to_apex{poly.apex_num_x - poly.apex_den * a.x,
                 poly.apex_num_y - poly.apex_den * a.y};
    Int d = det3x2(edge, to_apex);
    if (d < 0) d = -d;
    if (poly.mu * d != poly.apex_den) return false;
  }
  return true;
}

bool central_cone_basis_matches(const TwoParamType& t) {
  Int l = t.l, a = t.alpha, b = t.beta;
  Int g = weight_gcd(t);

  struct P3 {
    Int k, m, n;
    bool operator<(const P3& o) const {
      if (k != o.k) return k < o.k;
      if (m != o.m) return m < o.m;
      return n < o.n;
    }
    bool operator==(const P3& o) const { return k == o.k && m == o.m && n == o.n; }
  };

  auto in_cone = [&](P3 p) {
    return p.k >= 0 && p.k * a + l * p.m >= 0 && p.k * b + l * p.n >= 0;
  };

  // Candidates: lattice points of the closed parallelepiped of the three
  // extremal generators.
  std::vector<P3> cand;
  for (Int k = 0; k <= l / g; ++k) {
    Int mlo = -floor_div(k * a, l), mhi = 1 - ceil_div(k * a, l);
    Int nlo = -floor_div(k * b, l), nhi = 1 - ceil_div(k * b, l);
    for (Int m = mlo; m <= mhi; ++m)
      for (Int n = nlo; n <= nhi; ++n)
        if (!(k == 0 && m == 0 && n == 0)) cand.push_back({k, m, n});
  }

  std::vector<P3> basis;
  for (const P3& x : cand) {
    bool reducible = false;
    for (const P3& y : cand) {
      if (y == x) continue;
      P3 z{x.k - y.k, x.m - y.m, x.n - y.n};
      if ((z.k != 0 || z.m != 0 || z.n != 0) && in_cone(z)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(x);
  }
  std::sort(basis.begin(), basis.end());

  std::vector<P3> expected;
  expected.push_back({l / g, -a / g, -b / g});
  for (Vec2 v : build_polygon(t).points) expected.push_back({v.y, 1 - v.x, v.x - v.y});
  std::sort(expected.begin(), expected.end());

  return basis == expected;
}

}  // namespace crepant
