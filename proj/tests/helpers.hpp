#pragma once

#include <string_view>

#include "evreg/expr.hpp"
#include "evreg/mpoly.hpp"
#include "evreg/projmap.hpp"

namespace evreg::testing {

inline constexpr std::string_view kXYZ[] = {"X", "Y", "Z"};
inline constexpr std::string_view kXY[] = {"x", "y"};
inline constexpr std::string_view kX[] = {"x"};

inline MPoly P(std::string_view text, const FieldPtr& k = NumberField::rationals()) {
  return parse_polynomial(text, k, kXYZ);
}

inline MPoly A(std::string_view text, const FieldPtr& k = NumberField::rationals()) {
  return parse_polynomial(text, k, kXY);
}

inline RationalFunction R(std::string_view text, const FieldPtr& k = NumberField::rationals()) {
  return parse_rational_function(text, k, kXY);
}

inline HomogeneousTriple T(std::string_view a, std::string_view b, std::string_view c,
                           const FieldPtr& k = NumberField::rationals()) {
  return HomogeneousTriple(P(a, k), P(b, k), P(c, k));
}

inline ProjSelfMap M(std::string_view a, std::string_view b, std::string_view c,
                     const FieldPtr& k = NumberField::rationals()) {
  return ProjSelfMap::normalize(T(a, b, c, k));
}

inline ProjSelfMap affine_map(std::string_view f, std::string_view g, const FieldPtr& k = NumberField::rationals()) {
  return ProjSelfMap::normalize(homogenize_affine_pair(R(f, k), R(g, k)));
}

inline ProjPoint pt(long x, long y, long z) { return ProjPoint::from_rationals(NumberField::rationals(), x, y, z); }

}  // namespace evreg::testing
