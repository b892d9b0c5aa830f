#include "evreg/numfield.hpp"

#include <algorithm>
#include <sstream>

#include "evreg/error.hpp"

namespace evreg {

namespace {

using Dense = std::vector<Rational>;  // coefficients, constant term first

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// p mod m for monic-or-not m (nonzero), in place.
void reduce_mod(Dense& p, const Dense& m) {
  trim(p);
  const std::size_t dm = m.size() - 1;
  const Rational& lc = m.back();
  while (p.size() >= m.size()) {
    Rational factor = p.back() / lc;
    const std::size_t shift = p.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) p[shift + j] -= factor * m[j];
    p.pop_back();
    trim(p);
  }
}

Dense mul_dense(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Dense sub_dense(Dense a, const Dense& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Quotient and remainder of a by b (b nonzero).
std::pair<Dense, Dense> divmod_dense(Dense a, const Dense& b) {
  trim(a);
  Dense q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  const std::size_t db = b.size() - 1;
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - 1 - db;
    Rational factor = a.back() / b.back();
    q[shift] = factor;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= factor * b[j];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

std::string dense_to_string(const Dense& p, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    const Rational& c = p[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << to_string(mag);
      continue;
    }
    if (mag != 1) os << to_string(mag) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

FieldPtr NumberField::rationals() {
  static const FieldPtr q(new NumberField({Rational(0), Rational(1)}));
  return q;
}

FieldPtr NumberField::extension(std::vector<Rational> minpoly) {
  for (auto& c : minpoly) c.canonicalize();
  trim(minpoly);
  if (minpoly.size() < 2) {
    throw Error(ErrorCode::ZeroInput, "minimal polynomial must have degree >= 1");
  }
  if (minpoly.back() != 1) {
    throw Error(ErrorCode::ZeroInput, "minimal polynomial must be monic");
  }
  if (minpoly.size() == 2 && minpoly[0] == 0) return rationals();
  return FieldPtr(new NumberField(std::move(minpoly)));
}

std::string NumberField::declaration() const {
  if (minpoly_.size() == 2 && minpoly_[0] == 0) return "rational";
  return "ext minpoly " + dense_to_string(minpoly_, "t");
}

bool same_field(const FieldPtr& a, const FieldPtr& b) { return a == b || *a == *b; }

FieldElement::FieldElement(FieldPtr field)
    : field_(std::move(field)), coeffs_(static_cast<std::size_t>(field_->degree()), Rational(0)) {}

FieldElement::FieldElement(FieldPtr field, const Rational& value) : FieldElement(std::move(field)) {
  coeffs_[0] = value;
  coeffs_[0].canonicalize();
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)) {
  for (auto& c : coeffs) c.canonicalize();
  reduce_mod(coeffs, field_->minpoly());
  coeffs.resize(static_cast<std::size_t>(field_->degree()), Rational(0));
  coeffs_ = std::move(coeffs);
}

FieldElement FieldElement::generator(const FieldPtr& field) {
  return FieldElement(field, std::vector<Rational>{Rational(0), Rational(1)});
}

bool FieldElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool FieldElement::is_one() const {
  if (coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool FieldElement::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

int FieldElement::sign() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return sgn(c);
  }
  return 0;
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (!same_field(field_, o.field_)) {
    throw Error(ErrorCode::FieldMismatch, "operands belong to different fields");
  }
}

FieldElement FieldElement::operator-() const {
  FieldElement r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same_field(o);
  if (coeffs_.size() == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  Dense prod = mul_dense(coeffs_, o.coeffs_);
  reduce_mod(prod, field_->minpoly());
  prod.resize(coeffs_.size(), Rational(0));
  coeffs_ = std::move(prod);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  check_same_field(o);
  if (coeffs_.size() == 1) {
    if (o.coeffs_[0] == 0) throw Error(ErrorCode::DivisionByZero, "division by zero");
    coeffs_[0] /= o.coeffs_[0];
    return *this;
  }
  return *this *= o.inverse();
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (coeffs_.size() == 1) return FieldElement(field_, Rational(1) / coeffs_[0]);
  // Extended Euclid: track s with s*a == r (mod m).
  Dense r0 = field_->minpoly();
  Dense r1 = coeffs_;
  trim(r1);
  Dense s0;                 // coefficient of a for r0
  Dense s1{Rational(1)};    // coefficient of a for r1
  while (r1.size() > 1) {
    auto [q, rem] = divmod_dense(r0, r1);
    Dense s2 = sub_dense(s0, mul_dense(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) {
    throw Error(ErrorCode::NotInvertible,
                "element shares a factor with the declared minimal polynomial " +
                    dense_to_string(field_->minpoly(), "t") + " (reducible modulus)");
  }
  for (auto& c : s1) c /= r1[0];
  return FieldElement(field_, std::move(s1));
}

FieldElement FieldElement::pow(std::int64_t e) const { return pow(Integer(static_cast<long>(e))); }

FieldElement FieldElement::pow(const Integer& e) const {
  if (e < 0) return inverse().pow(Integer(-e));
  if (coeffs_.size() == 1) {
    if (!e.fits_ulong_p()) {
      if (coeffs_[0] == 0 || coeffs_[0] == 1) return *this;
      if (coeffs_[0] == -1) return FieldElement(field_, Rational(mpz_even_p(e.get_mpz_t()) ? 1 : -1));
      throw Error(ErrorCode::ExponentOverflow, "exponent too large for a nontrivial scalar power");
    }
    const unsigned long n = e.get_ui();
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), coeffs_[0].get_num_mpz_t(), n);
    mpz_pow_ui(r.get_den_mpz_t(), coeffs_[0].get_den_mpz_t(), n);
    return FieldElement(field_, r);
  }
  FieldElement result(field_, Rational(1));
  FieldElement base(*this);
  Integer k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return same_field(a.field_, b.field_) && a.coeffs_ == b.coeffs_;
}

int compare(const FieldElement& a, const FieldElement& b) {
  for (std::size_t i = 0; i < a.coeffs_.size() && i < b.coeffs_.size(); ++i) {
    const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

bool FieldElement::prints_as_atom() const {
  if (!is_rational()) {
    // A bare "t" or "-t" needs no parentheses.
    int nonzero = 0;
    for (const auto& c : coeffs_) nonzero += (c != 0);
    return nonzero == 1 && coeffs_[0] == 0 && coeffs_.size() > 1 && abs(coeffs_[1]) == 1;
  }
  return true;
}

std::string FieldElement::to_string() const {
  if (is_rational()) return evreg::to_string(coeffs_[0]);
  std::string s = dense_to_string(coeffs_, "t");
  if (prints_as_atom()) return s;
  return "(" + s + ")";
}

}  // namespace evreg
