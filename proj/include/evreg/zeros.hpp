#pragma once

#include <array>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "evreg/mpoly.hpp"
#include "evreg/numfield.hpp"

namespace evreg {

// A point of P^2 with its first nonzero coordinate scaled to 1.
class ProjPoint {
 public:
  ProjPoint(FieldElement x, FieldElement y, FieldElement z);
  static ProjPoint from_rationals(const FieldPtr& field, long x, long y, long z);

  const std::array<FieldElement, 3>& coords() const { return coords_; }
  const FieldElement& operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords_ == b.coords_; }
  // Descending lexicographic, so [1:0:0] sorts before [0:1:0] before [0:0:1].
  friend bool operator<(const ProjPoint& a, const ProjPoint& b);

  std::string to_string() const;  // "[1:0:0]"

 private:
  std::array<FieldElement, 3> coords_;
};

struct UnivariateRoots {
  std::vector<std::pair<FieldElement, int>> roots;  // value, multiplicity
  // True when the roots (with multiplicity) account for the full degree, i.e.
  // the polynomial splits into linear factors over the field.
  bool splits = false;
};

// Roots lying in the coefficient field of a nonzero polynomial that involves
// only variable var. Over an extension only roots in Q are searched; the
// polynomial then splits only when all its roots are rational.
UnivariateRoots roots_in_field(const MPoly& p, int var);

struct ZeroSet {
  std::vector<ProjPoint> points;  // sorted, distinct
  // Every common zero over the algebraic closure is among points.
  bool complete = false;
};

// Common zeros in P^2 of homogeneous forms in X, Y, Z with coordinates in the
// coefficient field, by elimination in the chart Z = 1, on the line Z = 0 and
// at [1:0:0]. Zero forms are ignored. Throws InfiniteZeroSet when the nonzero
// forms share a factor.
ZeroSet rational_common_zeros(std::span<const MPoly> forms);

}  // namespace evreg
