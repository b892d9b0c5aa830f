#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evreg/numfield.hpp"
#include "evreg/projmap.hpp"

namespace evreg {

inline constexpr int kDefaultPowerCap = 24;
inline constexpr std::array<int, 5> kDiagonalIndices{1, 2, 3, 4, 6};

// [[a, b], [c, d]] with nonzero determinant.
class IntMatrix2 {
 public:
  IntMatrix2(Integer a, Integer b, Integer c, Integer d);
  static IntMatrix2 identity() { return IntMatrix2(1, 0, 0, 1); }
  static IntMatrix2 scalar(const Integer& s) { return IntMatrix2(s, 0, 0, s); }

  const Integer& a() const { return e_[0]; }
  const Integer& b() const { return e_[1]; }
  const Integer& c() const { return e_[2]; }
  const Integer& d() const { return e_[3]; }
  const Integer& at(int row, int col) const { return e_[static_cast<std::size_t>(2 * row + col)]; }

  Integer det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }
  Integer trace() const { return e_[0] + e_[3]; }
  bool is_diagonal() const { return e_[1] == 0 && e_[2] == 0; }
  bool is_scalar() const { return is_diagonal() && e_[0] == e_[3]; }

  IntMatrix2 pow(int k) const;
  std::array<Integer, 2> apply(const std::array<Integer, 2>& v) const;

  friend IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y);
  friend bool operator==(const IntMatrix2& x, const IntMatrix2& y) { return x.e_ == y.e_; }
  std::string to_string() const;  // "[[3,1],[-3,3]]"

 private:
  std::array<Integer, 4> e_;
};

// x -> lambda (.) x^A on the 2-torus: (lambda1 x^a y^b, lambda2 x^c y^d).
class MonomialMap {
 public:
  MonomialMap(IntMatrix2 a, FieldElement lambda1, FieldElement lambda2);
  static MonomialMap identity(const FieldPtr& field);

  const IntMatrix2& matrix() const { return a_; }
  const std::array<FieldElement, 2>& lambda() const { return lambda_; }
  const FieldPtr& field() const { return lambda_[0].field(); }

  friend bool operator==(const MonomialMap& x, const MonomialMap& y) {
    return x.a_ == y.a_ && x.lambda_ == y.lambda_;
  }

 private:
  IntMatrix2 a_;
  std::array<FieldElement, 2> lambda_;
};

// M o N.
MonomialMap mm_compose(const MonomialMap& m, const MonomialMap& n);
MonomialMap mm_power(const MonomialMap& m, int k);

// Order of the eigenvalue ratio when it is a root of unity, read off from
// tr^2 = c * det with c in {0,1,2,3,4}. None for a non-diagonalizable
// repeated eigenvalue.
std::optional<int> ratio_root_of_unity_class(const IntMatrix2& a);

// Least k <= cap with A^k diagonal. Throws CertificateViolation when A is not
// diagonal and k is outside {1,2,3,4,6}.
std::optional<int> smallest_diagonal_power(const IntMatrix2& a, int cap = kDefaultPowerCap);

struct ScalarPower {
  int k = 0;
  Integer d;
};
// Least k <= cap with A^k = d * Id, d >= 1. Throws CertificateViolation when A
// is not scalar and k is outside {1,2,3,4,6,8,12}.
std::optional<ScalarPower> smallest_scalar_positive_power(const IntMatrix2& a, int cap = kDefaultPowerCap);

using Ray = std::array<Integer, 2>;

// Complete two-dimensional fan; the constructor throws IncompleteFan unless
// the rays are primitive and the cones tile the plane exactly once.
class Fan {
 public:
  Fan(std::vector<Ray> rays, std::vector<std::pair<std::size_t, std::size_t>> cones);

  static Fan p2();
  static Fan p1xp1();
  static Fan hirzebruch(long n);
  // "p2", "p1xp1" or "f<n>".
  static Fan for_surface(std::string_view name);

  const std::vector<Ray>& rays() const { return rays_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& cones() const { return cones_; }

  // Some cone contains both vectors.
  bool common_cone(const Ray& u, const Ray& v) const;

 private:
  std::vector<Ray> rays_;
  std::vector<std::pair<std::size_t, std::size_t>> cones_;  // counterclockwise
};

bool fan_compatible(const IntMatrix2& a, const Fan& fan);
std::optional<int> first_extendable_power(const MonomialMap& m, const Fan& fan, int cap = kDefaultPowerCap);

ProjSelfMap to_proj_map(const MonomialMap& m);

}  // namespace evreg
