#pragma once

#include <cstddef>
#include <vector>

#include "crepant/numeric.hpp"

namespace crepant {

// Cyclic quotient type 1/l(w1,...,wr) with weights reduced mod l.
struct QuotientType {
  Int l = 1;
  std::vector<Int> weights;
  Int r() const { return static_cast<Int>(weights.size()); }
};

// Validates l >= 1, r >= 2 and reduces weights mod l.
QuotientType make_quotient(Int l, std::vector<Int> weights);

// Every weight is coprime-complementary: dropping any one coordinate leaves
// weights generating Z/l together, i.e. gcd(l, all but one) = 1 for each one.
bool is_small(const QuotientType& t);

// Sum of weights is divisible by l.
bool is_gorenstein(const QuotientType& t);

// Equivalence under unit rescaling of the generator and coordinate
// permutation.
bool types_equivalent(const QuotientType& a, const QuotientType& b);

// Number of nonzero weights, and whether the action is free away from the
// origin.
struct SplittingCodim {
  Int codim = 0;
  bool isolated = false;
};

SplittingCodim splitting_codim(const QuotientType& t);

// Lattice point with integer coordinates scaled by a common denominator.
struct ScaledPoint {
  std::vector<Int> coords;
  Int scale = 1;
  friend bool operator==(const ScaledPoint&, const ScaledPoint&) = default;
};

// The l points (1/l)([j*w1],...,[j*wr]) of the quotient lattice inside the
// half-open unit box, j = 0..l-1, each with its age (coordinate sum / l).
struct GroupPoint {
  Int j = 0;
  std::vector<Int> scaled_coords;  // in [0, l), common scale l
  Int age_numerator = 0;           // sum of scaled coords
  Int age(Int l) const { return age_numerator / l; }
};

std::vector<GroupPoint> group_points(const QuotientType& t);

// Indices j of the age-one group points. Requires Gorenstein.
std::vector<Int> junior_indices(const QuotientType& t);

// Count of group points at each age, index = age. Requires Gorenstein.
std::vector<Int> age_histogram(const QuotientType& t);

// Hilbert basis of the positive orthant with respect to the quotient
// lattice, computed by dominance reduction of the box points. Coordinates
// are scaled by l.
struct HilbertBasisReport {
  std::vector<ScaledPoint> elements;
  bool all_junior = false;
  long long comparisons = 0;
};

// guard bounds the number of dominance comparisons; throws when exceeded.
HilbertBasisReport hilbert_basis_bruteforce(const QuotientType& t,
                                            long long guard = 100000000LL);

// True when every non-unit Hilbert basis element has age one.
// Requires Gorenstein.
bool hilbert_basis_all_junior(const QuotientType& t,
                              long long guard = 100000000LL);

// Number of lattice points in the nu-th dilation of the junior simplex,
// by the residue-class counting formula. Requires Gorenstein and smallness.
BigInt count_dilated_junior(const QuotientType& t, Int nu);

// Same count by direct enumeration of representatives. Requires the same
// preconditions; intended as a cross-check.
BigInt count_dilated_junior_enum(const QuotientType& t, Int nu);

}  // namespace crepant
