#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "evreg/mpoly.hpp"
#include "evreg/zeros.hpp"

namespace evreg {

inline constexpr std::int64_t kDefaultDegreeCap = 4096;
inline constexpr int kDefaultRegularCap = 12;
inline constexpr std::array<int, 7> kRegularIndices{1, 2, 3, 4, 6, 8, 12};

bool in_regular_index_set(std::int64_t k);

// Rational self-map of P^2: coprime forms of a common degree, canonically
// scaled as a triple.
class ProjSelfMap {
 public:
  static ProjSelfMap normalize(const HomogeneousTriple& raw);
  static ProjSelfMap identity(const FieldPtr& field);

  const HomogeneousTriple& forms() const { return forms_; }
  const MPoly& operator[](std::size_t i) const { return forms_[i]; }
  std::int64_t degree() const { return forms_.degree(); }
  const FieldPtr& field() const { return forms_.field(); }

  // Throws NotRegular when every form vanishes at p.
  ProjPoint apply(const ProjPoint& p) const;

  friend bool operator==(const ProjSelfMap& a, const ProjSelfMap& b) { return a.forms_ == b.forms_; }
  std::string to_string() const { return forms_.to_string(); }

 private:
  explicit ProjSelfMap(HomogeneousTriple forms) : forms_(std::move(forms)) {}
  HomogeneousTriple forms_;
};

// outer o inner. The pre-cancellation degree deg(outer) * deg(inner) may not
// exceed degree_cap unless both maps are monomial, in which case exponents
// are only bounded by overflow checks.
ProjSelfMap compose(const ProjSelfMap& outer, const ProjSelfMap& inner, std::int64_t degree_cap = kDefaultDegreeCap);

// [phi^1, ..., phi^n].
std::vector<ProjSelfMap> iterates(const ProjSelfMap& phi, int n, std::int64_t degree_cap = kDefaultDegreeCap);
ProjSelfMap iterate(const ProjSelfMap& phi, int n, std::int64_t degree_cap = kDefaultDegreeCap);

bool is_regular(const ProjSelfMap& phi);
bool is_dominant(const ProjSelfMap& phi);
bool is_invertible_endo(const ProjSelfMap& phi);

enum class Certificate { InIndexSet, Invertible, NotFoundWithinCap };
std::string_view to_string(Certificate c);

struct IterationReport {
  std::optional<int> first_regular;
  std::optional<ProjSelfMap> regular_iterate;
  bool invertible_flag = false;
  bool dominant_flag = false;
  std::vector<std::int64_t> degree_sequence;
  Certificate certificate = Certificate::NotFoundWithinCap;
};

// Least k <= cap with phi^k regular. A non-invertible regular iterate at an
// index outside {1,2,3,4,6,8,12} throws CertificateViolation.
IterationReport first_regular_iterate(const ProjSelfMap& phi, int cap = kDefaultRegularCap,
                                      std::int64_t degree_cap = kDefaultDegreeCap);

struct DegreeReport {
  std::vector<std::int64_t> degrees;
  std::int64_t final_degree = 0;
  int n = 0;
  std::string lambda1_decimal;  // (final_degree)^(1/n), six decimals
};

DegreeReport degree_sequence(const ProjSelfMap& phi, int n, std::int64_t degree_cap = kDefaultDegreeCap);

enum class Completeness { Complete, Incomplete, Empty };
std::string_view to_string(Completeness c);

struct PointSet {
  std::vector<ProjPoint> points;
  Completeness completeness = Completeness::Empty;
};

PointSet rational_indeterminacy_points(const ProjSelfMap& phi);
// Requires phi regular.
PointSet point_fiber(const ProjSelfMap& phi, const ProjPoint& p);

enum class Invariance { Invariant, NotInvariant, Unknown };
std::string_view to_string(Invariance v);

Invariance verify_totally_invariant(const ProjSelfMap& phi, std::span<const ProjPoint> s);

// 3x3 coefficient matrix of a degree-one map (row i holds the X, Y, Z
// coefficients of form i).
std::array<std::array<FieldElement, 3>, 3> linear_coefficients(const ProjSelfMap& phi);

}  // namespace evreg
