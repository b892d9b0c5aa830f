#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evreg/numfield.hpp"

namespace evreg {

inline constexpr int kMaxVars = 3;

// Exponent vector; entries beyond nvars are always zero.
using Exponents = std::array<std::int64_t, kMaxVars>;

// Checked exponent addition; throws ExponentOverflow instead of wrapping.
std::int64_t add_exponents(std::int64_t a, std::int64_t b);
std::int64_t mul_exponents(std::int64_t a, std::int64_t b);

// Sparse polynomial in up to three variables over a NumberField. Terms are
// kept in descending lexicographic order of exponents (x0 > x1 > x2), so the
// first term is the lex-leading one.
class MPoly {
 public:
  using Terms = std::map<Exponents, FieldElement, std::greater<Exponents>>;

  MPoly(FieldPtr field, int nvars);

  static MPoly constant(const FieldPtr& field, int nvars, const FieldElement& c);
  static MPoly constant(const FieldPtr& field, int nvars, long c);
  static MPoly variable(const FieldPtr& field, int nvars, int index);
  static MPoly monomial(const FieldPtr& field, int nvars, const Exponents& e, const FieldElement& c);

  int nvars() const { return nvars_; }
  const FieldPtr& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  // -1 for the zero polynomial.
  std::int64_t total_degree() const;
  std::int64_t degree_in(int var) const;
  std::int64_t min_degree_in(int var) const;
  bool is_homogeneous() const;
  // Componentwise minimum exponent over all terms (the monomial content).
  Exponents monomial_content() const;

  const Exponents& leading_exponents() const { return terms_.begin()->first; }
  const FieldElement& leading_coefficient() const { return terms_.begin()->second; }
  FieldElement coefficient(const Exponents& e) const;

  void add_term(const Exponents& e, const FieldElement& c);

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  MPoly scaled(const FieldElement& c) const;
  MPoly shifted(const Exponents& e) const;  // multiply by a monomial
  MPoly pow(std::uint64_t e) const;

  FieldElement evaluate(std::span<const FieldElement> point) const;
  // p(values[0], ..., values[nvars-1]); all values share an arity which
  // becomes the arity of the result.
  MPoly compose(std::span<const MPoly> values) const;
  // Replace variable var by the constant value, keeping the arity.
  MPoly specialize(int var, const FieldElement& value) const;
  MPoly derivative(int var) const;
  // Same terms, different arity (extra exponents must be zero).
  MPoly with_nvars(int nvars) const;

  // Coefficients with respect to one variable, indexed by its exponent; the
  // coefficient polynomials keep the arity and have that exponent zeroed.
  std::map<std::int64_t, MPoly> coefficients_in(int var) const;

  friend bool operator==(const MPoly& a, const MPoly& b);

  // Uses X,Y,Z for three variables and x,y (or x) otherwise unless names are given.
  std::string to_string() const;
  std::string to_string(std::span<const std::string_view> names) const;

 private:
  void check_compatible(const MPoly& o) const;
  FieldPtr field_;
  int nvars_;
  Terms terms_;
};

std::span<const std::string_view> default_variable_names(int nvars);

// Canonical scaling applied jointly to a list of polynomials: over Q clear
// denominators, divide by the integer content, and make the lex-first
// coefficient of the first nonzero polynomial positive; over an extension make
// that coefficient 1.
void canonicalize(std::span<MPoly> polys);
MPoly canonical(MPoly p);

// Exact division; throws NotExact when d does not divide p.
MPoly exact_divide(const MPoly& p, const MPoly& d);

// Greatest common divisor in canonical scaling. Throws AllZero when every
// input vanishes.
MPoly mp_gcd(std::span<const MPoly> polys);
MPoly mp_gcd(const MPoly& a, const MPoly& b);

// Sylvester resultant eliminating var. The sign is fixed so that the
// lex-leading coefficient has positive sign().
MPoly resultant(const MPoly& p, const MPoly& q, int var);

// Three forms in X,Y,Z of a common degree (zero forms are allowed, but not
// all three).
class HomogeneousTriple {
 public:
  HomogeneousTriple(MPoly f0, MPoly f1, MPoly f2);

  const std::array<MPoly, 3>& forms() const { return forms_; }
  const MPoly& operator[](std::size_t i) const { return forms_[i]; }
  std::int64_t degree() const { return degree_; }
  const FieldPtr& field() const { return forms_[0].field(); }
  // Every nonzero form is a single term.
  bool is_monomial() const;

  friend bool operator==(const HomogeneousTriple& a, const HomogeneousTriple& b) {
    return a.forms_ == b.forms_;
  }
  std::string to_string() const;

 private:
  std::array<MPoly, 3> forms_;
  std::int64_t degree_ = 0;
};

// p/q with gcd(p, q) = 1 and q canonically scaled.
class RationalFunction {
 public:
  explicit RationalFunction(MPoly num);
  RationalFunction(MPoly num, MPoly den);

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  int nvars() const { return num_.nvars(); }
  const FieldPtr& field() const { return num_.field(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction pow(std::int64_t e) const;
  RationalFunction compose(std::span<const MPoly> values) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  std::string to_string(std::span<const std::string_view> names) const;

 private:
  MPoly num_;
  MPoly den_;
};

// Substitute x = X/Z, y = Y/Z into the affine pair (f, g) and clear
// denominators: returns [A*D : C*B : B*D] for f = A/B, g = C/D, with the
// common factor removed and canonical scaling.
HomogeneousTriple homogenize_affine_pair(const RationalFunction& f, const RationalFunction& g);

MPoly jacobian_det(const HomogeneousTriple& t);

// Does F0 = F1 = F2 = 0 have a solution in P^2 over the algebraic closure?
// Monomial triples are decided combinatorially; everything else goes through
// has_common_projective_zero_macaulay.
bool has_common_projective_zero(const HomogeneousTriple& t);
// Rank test on the degree-N Macaulay matrix, N = d0 + d1 + d2 - 2.
bool has_common_projective_zero_macaulay(const HomogeneousTriple& t);
bool has_common_projective_zero_monomial(const HomogeneousTriple& t);

}  // namespace evreg
