#include "crepant/quotient.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace crepant {

QuotientType make_quotient(Int l, std::vector<Int> weights) {
  if (l < 1) throw std::invalid_argument("order l must be positive");
  if (weights.size() < 2) throw std::invalid_argument("need at least two weights");
  for (Int& w : weights) w = pos_mod(w, l);
  return {l, std::move(weights)};
}

bool is_small(const QuotientType& t) {
  Int r = t.r();
  for (Int skip = 0; skip < r; ++skip) {
    Int g = t.l;
    for (Int i = 0; i < r; ++i)
      if (i != skip) g = gcd_ll(g, t.weights[i]);
    if (g != 1) return false;
  }
  return true;
}

bool is_gorenstein(const QuotientType& t) {
  Int sum = std::accumulate(t.weights.begin(), t.weights.end(), 0LL);
  return sum % t.l == 0;
}

bool types_equivalent(const QuotientType& a, const QuotientType& b) {
  if (a.l != b.l || a.r() != b.r()) return false;
  std::vector<Int> sb = b.weights;
  std::sort(sb.begin(), sb.end());
  for (Int u = 1; u < a.l || u == 1; ++u) {
    if (gcd_ll(u, a.l) != 1) continue;
    std::vector<Int> sa;
    sa.reserve(a.weights.size());
    for (Int w : a.weights) sa.push_back(pos_mod(u * w, a.l));
    std::sort(sa.begin(), sa.end());
    if (sa == sb) return true;
    if (a.l == 1) break;
  }
  return false;
}

SplittingCodim splitting_codim(const QuotientType& t) {
  SplittingCodim out;
  for (Int w : t.weights)
    if (w != 0) ++out.codim;
  out.isolated = true;
  for (Int w : t.weights)
    if (gcd_ll(w, t.l) != 1) out.isolated = false;
  return out;
}

std::vector<GroupPoint> group_points(const QuotientType& t) {
  std::vector<GroupPoint> pts;
  pts.reserve(static_cast<size_t>(t.l));
  for (Int j = 0; j < t.l; ++j) {
    GroupPoint g;
    g.j = j;
    g.scaled_coords.reserve(t.weights.size());
    for (Int w : t.weights) g.scaled_coords.push_back(pos_mod(j * w, t.l));
    g.age_numerator = std::accumulate(g.scaled_coords.begin(), g.scaled_coords.end(), 0LL);
    pts.push_back(std::move(g));
  }
  return pts;
}

std::vector<Int> junior_indices(const QuotientType& t) {
  if (!is_gorenstein(t)) throw std::invalid_argument("junior_indices requires a Gorenstein type");
  std::vector<Int> out;
  for (const GroupPoint& g : group_points(t))
    if (g.age_numerator == t.l) out.push_back(g.j);
  return out;
}

std::vector<Int> age_histogram(const QuotientType& t) {
  if (!is_gorenstein(t)) throw std::invalid_argument("age_histogram requires a Gorenstein type");
  std::vector<Int> hist(static_cast<size_t>(t.r()), 0);
  for (const GroupPoint& g : group_points(t)) {
    Int age = g.age_numerator / t.l;
    hist.at(static_cast<size_t>(age)) += 1;
  }
  return hist;
}

HilbertBasisReport hilbert_basis_bruteforce(const QuotientType& t, long long guard) {
  Int r = t.r();
  // Nonzero box points, deduplicated.
  std::set<std::vector<Int>> box;
  for (const GroupPoint& g : group_points(t)) {
    if (g.age_numerator > 0) box.insert(g.scaled_coords);
  }
  std::vector<std::vector<Int>> cand(box.begin(), box.end());

  HilbertBasisReport rep;
  // A box point decomposes only through a smaller box point, so dominance
  // inside the box decides irreducibility.
  for (const auto& x : cand) {
    bool irreducible = true;
    for (const auto& y : cand) {
      rep.comparisons += 1;
      if (rep.comparisons > guard)
        throw std::runtime_error("hilbert_basis_bruteforce guard exceeded");
      if (&y == &x || y == x) continue;
      bool dominated = true;
      for (Int i = 0; i < r; ++i)
        if (y[static_cast<size_t>(i)] > x[static_cast<size_t>(i)]) {
          dominated = false;
          break;
        }
      if (dominated) {
        irreducible = false;
        break;
      }
    }
    if (irreducible) rep.elements.push_back({x, t.l});
  }

  bool gorenstein = is_gorenstein(t);
  rep.all_junior = gorenstein;
  for (const ScaledPoint& e : rep.elements) {
    Int sum = std::accumulate(e.coords.begin(), e.coords.end(), 0LL);
    if (sum != t.l) rep.all_junior = false;
  }

  // Unit vectors complete the basis.
  for (Int i = 0; i < r; ++i) {
    std::vector<Int> unit(static_cast<size_t>(r), 0);
    unit[static_cast<size_t>(i)] = t.l;
    rep.elements.push_back({std::move(unit), t.l});
  }
  std::sort(rep.elements.begin(), rep.elements.end(),
            [](const ScaledPoint& a, const ScaledPoint& b) { return a.coords < b.coords; });
  return rep;
}

bool hilbert_basis_all_junior(const QuotientType& t, long long guard) {
  if (!is_gorenstein(t))
    throw std::invalid_argument("hilbert_basis_all_junior requires a Gorenstein type");
  return hilbert_basis_bruteforce(t, guard).all_junior;
}

BigInt count_dilated_junior(const QuotientType& t, Int nu) {
  if (nu < 0) throw std::invalid_argument("dilation factor must be nonnegative");
  Int r = t.r();
  BigInt total = 0;
  for (const GroupPoint& g : group_points(t)) {
    Int age = g.age_numerator / t.l;
    if (g.age_numerator % t.l != 0)
      throw std::invalid_argument("count_dilated_junior requires a Gorenstein type");
    total += binomial(nu - age + r - 1, r - 1);
  }
  return total;
}

namespace {

// Counts compositions of total into r nonnegative parts by direct recursion.
BigInt count_compositions(Int total, Int parts) {
  if (total < 0) return 0;
  if (parts == 1) return 1;
  BigInt acc = 0;
  for (Int first = 0; first <= total; ++first) acc += count_compositions(total - first, parts - 1);
  return acc;
}

}  // namespace

BigInt count_dilated_junior_enum(const QuotientType& t, Int nu) {
  if (nu < 0) throw std::invalid_argument("dilation factor must be nonnegative");
  Int r = t.r();
  BigInt total = 0;
  for (const GroupPoint& g : group_points(t)) {
    if (g.age_numerator % t.l != 0)
      throw std::invalid_argument("count_dilated_junior_enum requires a Gorenstein type");
    Int rem = nu - g.age_numerator / t.l;
    total += count_compositions(rem, r);
  }
  return total;
}

}  // namespace crepant
