#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace evreg {

// GMP keeps mpq_class values canonical (reduced, positive denominator) after
// every arithmetic operation, so structural equality is numeric equality.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);
std::string to_string(const Rational& r);

// Q(t)/(m(t)) for a monic m. Degree 1 is plain Q.
class NumberField {
 public:
  static std::shared_ptr<const NumberField> rationals();
  // Coefficients are listed from the constant term upwards and must describe a
  // monic polynomial of degree >= 1. Irreducibility is not checked here; a
  // reducible modulus surfaces later as NotInvertible from inverse().
  static std::shared_ptr<const NumberField> extension(std::vector<Rational> minpoly);

  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
  const std::vector<Rational>& minpoly() const { return minpoly_; }
  bool is_rational() const { return degree() == 1; }

  bool operator==(const NumberField& other) const { return minpoly_ == other.minpoly_; }

  // "rational" or "ext minpoly t^2 - t + 1"
  std::string declaration() const;

 private:
  explicit NumberField(std::vector<Rational> minpoly) : minpoly_(std::move(minpoly)) {}
  std::vector<Rational> minpoly_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

bool same_field(const FieldPtr& a, const FieldPtr& b);

// An element of a NumberField, stored as its unique representative of degree
// below the field degree.
class FieldElement {
 public:
  explicit FieldElement(FieldPtr field);
  FieldElement(FieldPtr field, const Rational& value);
  FieldElement(FieldPtr field, long value) : FieldElement(std::move(field), Rational(value)) {}
  // Any-length coefficient list, reduced modulo the minimal polynomial.
  FieldElement(FieldPtr field, std::vector<Rational> coeffs);

  static FieldElement generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  const Rational& rational_part() const { return coeffs_[0]; }
  // Sign of the first nonzero coordinate in the power basis; 0 for zero.
  int sign() const;

  FieldElement inverse() const;
  FieldElement pow(std::int64_t e) const;
  FieldElement pow(const Integer& e) const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  // Total order on representatives (lexicographic on coordinates); used only
  // to make output deterministic.
  friend int compare(const FieldElement& a, const FieldElement& b);

  // DSL syntax: "3/4", "-2", "(t - 1)", "t".
  std::string to_string() const;
  // True when to_string() is a single signed atom that needs no parentheses
  // when used as a factor.
  bool prints_as_atom() const;

 private:
  void check_same_field(const FieldElement& o) const;
  FieldPtr field_;
  std::vector<Rational> coeffs_;
};

}  // namespace evreg
