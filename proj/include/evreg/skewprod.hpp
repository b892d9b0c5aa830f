#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evreg/mpoly.hpp"
#include "evreg/numfield.hpp"

namespace evreg {

inline constexpr std::int64_t kDefaultFiberDegreeCap = 4096;
inline constexpr int kDefaultLinearCap = 24;

// (x, y) -> (phi(x), sum_i a_i(x) y^i) with a_d != 0, d >= 1. phi and the
// a_i live in one variable x.
class SkewMap {
 public:
  SkewMap(MPoly phi, std::vector<RationalFunction> coeffs);
  // Splits f(x, y) into its y-coefficients; the denominator may only involve x.
  static SkewMap from_pair(const MPoly& phi, const RationalFunction& f);

  const MPoly& phi() const { return phi_; }
  const std::vector<RationalFunction>& coeffs() const { return coeffs_; }
  int fiber_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const FieldPtr& field() const { return phi_.field(); }

  // f as a rational function in (x, y).
  RationalFunction fiber_function() const;

  friend bool operator==(const SkewMap& a, const SkewMap& b) { return a.phi_ == b.phi_ && a.coeffs_ == b.coeffs_; }

 private:
  MPoly phi_;
  std::vector<RationalFunction> coeffs_;
};

SkewMap skew_iterate(const SkewMap& f, int n, std::int64_t fiber_degree_cap = kDefaultFiberDegreeCap);

// Leading y-coefficient of F^k against a_d(x)^(d^(k-1)) a_d(phi(x))^(d^(k-2)) ... a_d(phi^(k-1)(x)).
bool leading_coeff_identity_check(const SkewMap& f, int k, std::int64_t fiber_degree_cap = kDefaultFiberDegreeCap);

// (x, y) -> (a x + q(y), c y); q is a polynomial in the single variable y.
class TriangularMap {
 public:
  TriangularMap(FieldElement a, FieldElement c, MPoly q);

  const FieldElement& a() const { return a_; }
  const FieldElement& c() const { return c_; }
  const MPoly& q() const { return q_; }
  const FieldPtr& field() const { return a_.field(); }

  // The same map as a skew product over the base coordinate y.
  SkewMap as_skew() const;

  friend bool operator==(const TriangularMap& x, const TriangularMap& y) {
    return x.a_ == y.a_ && x.c_ == y.c_ && x.q_ == y.q_;
  }

 private:
  FieldElement a_;
  FieldElement c_;
  MPoly q_;
};

// Q_k with T^k = (a^k x + Q_k(y), c^k y).
MPoly triangular_x_part(const TriangularMap& t, int k);

// Least k <= cap with T^k affine-linear.
std::optional<int> first_linear_iterate(const TriangularMap& t, int cap = kDefaultLinearCap);

// For q = m y^j: m (a^k - c^(jk)) / (a - c^j). Throws ClosedFormInvalid when
// a = c^j or q is not a single term of positive degree.
FieldElement triangular_coefficient_closed_form(const TriangularMap& t, int k);
// Closed form when valid, otherwise the coefficient of y^j read off Q_k.
FieldElement triangular_coefficient(const TriangularMap& t, int k);

struct Independence {
  bool independent = true;
  std::vector<Integer> witness;  // prod r_i^(e_i) = 1, primitive, first nonzero entry positive
};

Independence mult_indep_rationals(const std::vector<Rational>& r);

enum class LinearCase { CaseA, CaseB, Neither, UnsupportedEigenvalues };
std::string_view to_string(LinearCase c);

struct EigenBlock {
  Rational value;
  std::vector<int> block_sizes;  // descending
};

struct LinearAutoClass {
  LinearCase which = LinearCase::Neither;
  std::vector<EigenBlock> eigen_data;  // empty unless all eigenvalues are rational
};

using Matrix3 = std::array<std::array<FieldElement, 3>, 3>;

LinearAutoClass classify_linear_auto(const Matrix3& a);

}  // namespace evreg
