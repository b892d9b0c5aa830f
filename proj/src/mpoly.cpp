#include "evreg/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "evreg/error.hpp"
#include "evreg/linalg.hpp"

namespace evreg {

std::int64_t add_exponents(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorCode::ExponentOverflow, "exponent sum exceeds the machine word");
  }
  return r;
}

std::int64_t mul_exponents(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::ExponentOverflow, "exponent product exceeds the machine word");
  }
  return r;
}

namespace {

Exponents add(const Exponents& a, const Exponents& b) {
  return {add_exponents(a[0], b[0]), add_exponents(a[1], b[1]), add_exponents(a[2], b[2])};
}

bool divides(const Exponents& a, const Exponents& b) {
  return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2];
}

Exponents sub(const Exponents& a, const Exponents& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

std::int64_t sum(const Exponents& e) { return add_exponents(add_exponents(e[0], e[1]), e[2]); }

Exponents unit(int var, std::int64_t k) {
  Exponents e{0, 0, 0};
  e[static_cast<std::size_t>(var)] = k;
  return e;
}

}  // namespace

// ---------------------------------------------------------------- MPoly basics

MPoly::MPoly(FieldPtr field, int nvars) : field_(std::move(field)), nvars_(nvars) {
  if (nvars < 1 || nvars > kMaxVars) {
    throw Error(ErrorCode::ArityMismatch, "polynomials have between 1 and 3 variables");
  }
}

MPoly MPoly::constant(const FieldPtr& field, int nvars, const FieldElement& c) {
  MPoly p(field, nvars);
  p.add_term({0, 0, 0}, c);
  return p;
}

MPoly MPoly::constant(const FieldPtr& field, int nvars, long c) {
  return constant(field, nvars, FieldElement(field, c));
}

MPoly MPoly::variable(const FieldPtr& field, int nvars, int index) {
  if (index < 0 || index >= nvars) throw Error(ErrorCode::VarOutOfRange, "variable index out of range");
  return monomial(field, nvars, unit(index, 1), FieldElement(field, 1L));
}

MPoly MPoly::monomial(const FieldPtr& field, int nvars, const Exponents& e, const FieldElement& c) {
  MPoly p(field, nvars);
  for (int i = 0; i < kMaxVars; ++i) {
    if (e[static_cast<std::size_t>(i)] < 0 || (i >= nvars && e[static_cast<std::size_t>(i)] != 0)) {
      throw Error(ErrorCode::VarOutOfRange, "bad exponent vector for monomial");
    }
  }
  p.add_term(e, c);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0});
}

std::int64_t MPoly::total_degree() const {
  std::int64_t d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, sum(e));
  return d;
}

std::int64_t MPoly::degree_in(int var) const {
  std::int64_t d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(var)]);
  return d;
}

std::int64_t MPoly::min_degree_in(int var) const {
  if (terms_.empty()) return 0;
  std::int64_t d = terms_.begin()->first[static_cast<std::size_t>(var)];
  for (const auto& [e, c] : terms_) d = std::min(d, e[static_cast<std::size_t>(var)]);
  return d;
}

bool MPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const std::int64_t d = sum(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return sum(t.first) == d; });
}

Exponents MPoly::monomial_content() const {
  if (terms_.empty()) return {0, 0, 0};
  Exponents m = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
  }
  return m;
}

FieldElement MPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? FieldElement(field_) : it->second;
}

void MPoly::add_term(const Exponents& e, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MPoly::check_compatible(const MPoly& o) const {
  if (nvars_ != o.nvars_) throw Error(ErrorCode::ArityMismatch, "polynomials have different arity");
  if (!same_field(field_, o.field_)) throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
}

MPoly MPoly::operator-() const {
  MPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_compatible(b);
  if (a.is_zero() || b.is_zero()) return MPoly(a.field_, a.nvars_);
  if (b.is_monomial()) return a.shifted(b.leading_exponents()).scaled(b.leading_coefficient());
  if (a.is_monomial()) return b.shifted(a.leading_exponents()).scaled(a.leading_coefficient());
  MPoly r(a.field_, a.nvars_);
  FieldElement prod(a.field_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      prod = ca;
      prod *= cb;
      r.add_term(add(ea, eb), prod);
    }
  }
  return r;
}

MPoly MPoly::scaled(const FieldElement& c) const {
  if (c.is_zero()) return MPoly(field_, nvars_);
  MPoly r(*this);
  if (c.is_one()) return r;
  for (auto& [e, coef] : r.terms_) coef *= c;
  return r;
}

MPoly MPoly::shifted(const Exponents& s) const {
  MPoly r(field_, nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), add(e, s), c);
  return r;
}

MPoly MPoly::pow(std::uint64_t e) const {
  if (e == 0) return constant(field_, nvars_, 1);
  if (is_monomial()) {
    const auto& [ex, c] = *terms_.begin();
    const auto k = static_cast<std::int64_t>(e);
    if (k < 0) throw Error(ErrorCode::ExponentOverflow, "power too large");
    Exponents r{mul_exponents(ex[0], k), mul_exponents(ex[1], k), mul_exponents(ex[2], k)};
    return monomial(field_, nvars_, r, c.pow(k));
  }
  MPoly result = constant(field_, nvars_, 1);
  MPoly base(*this);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

FieldElement MPoly::evaluate(std::span<const FieldElement> point) const {
  if (static_cast<int>(point.size()) != nvars_) throw Error(ErrorCode::ArityMismatch, "point has wrong arity");
  FieldElement total(field_);
  for (const auto& [e, c] : terms_) {
    FieldElement t = c;
    for (int i = 0; i < nvars_; ++i) {
      const auto k = e[static_cast<std::size_t>(i)];
      if (k != 0) t *= point[static_cast<std::size_t>(i)].pow(k);
    }
    total += t;
  }
  return total;
}

MPoly MPoly::compose(std::span<const MPoly> values) const {
  if (static_cast<int>(values.size()) != nvars_) throw Error(ErrorCode::ArityMismatch, "wrong number of values");
  const int out_vars = values[0].nvars();
  const FieldPtr& out_field = values[0].field();
  for (const auto& v : values) {
    if (v.nvars() != out_vars) throw Error(ErrorCode::ArityMismatch, "substituted values differ in arity");
    if (!same_field(v.field(), field_)) throw Error(ErrorCode::FieldMismatch, "substitution over another field");
  }
  // Powers of non-monomial values are built incrementally and cached.
  std::array<std::vector<MPoly>, kMaxVars> cache;
  auto power = [&](int var, std::int64_t k) -> MPoly {
    const MPoly& v = values[static_cast<std::size_t>(var)];
    if (v.is_monomial() || v.is_zero()) return v.pow(static_cast<std::uint64_t>(k));
    auto& c = cache[static_cast<std::size_t>(var)];
    if (c.empty()) c.push_back(constant(out_field, out_vars, 1));
    while (static_cast<std::int64_t>(c.size()) <= k) c.push_back(c.back() * v);
    return c[static_cast<std::size_t>(k)];
  };
  MPoly result(out_field, out_vars);
  for (const auto& [e, c] : terms_) {
    MPoly term = constant(out_field, out_vars, c);
    for (int i = 0; i < nvars_; ++i) {
      const auto k = e[static_cast<std::size_t>(i)];
      if (k != 0) term = term * power(i, k);
      if (term.is_zero()) break;
    }
    result += term;
  }
  return result;
}

MPoly MPoly::specialize(int var, const FieldElement& value) const {
  if (var < 0 || var >= nvars_) throw Error(ErrorCode::VarOutOfRange, "variable index out of range");
  MPoly r(field_, nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    const auto k = f[static_cast<std::size_t>(var)];
    f[static_cast<std::size_t>(var)] = 0;
    r.add_term(f, k == 0 ? c : c * value.pow(k));
  }
  return r;
}

MPoly MPoly::derivative(int var) const {
  if (var < 0 || var >= nvars_) throw Error(ErrorCode::VarOutOfRange, "variable index out of range");
  MPoly r(field_, nvars_);
  for (const auto& [e, c] : terms_) {
    const auto k = e[static_cast<std::size_t>(var)];
    if (k == 0) continue;
    Exponents f = e;
    f[static_cast<std::size_t>(var)] = k - 1;
    r.add_term(f, c * FieldElement(field_, static_cast<long>(k)));
  }
  return r;
}

MPoly MPoly::with_nvars(int nvars) const {
  MPoly r(field_, nvars);
  for (const auto& [e, c] : terms_) {
    for (int i = nvars; i < kMaxVars; ++i) {
      if (e[static_cast<std::size_t>(i)] != 0) throw Error(ErrorCode::ArityMismatch, "variable would be dropped");
    }
    r.terms_.emplace(e, c);
  }
  return r;
}

std::map<std::int64_t, MPoly> MPoly::coefficients_in(int var) const {
  std::map<std::int64_t, MPoly> out;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    const auto k = f[static_cast<std::size_t>(var)];
    f[static_cast<std::size_t>(var)] = 0;
    auto it = out.try_emplace(k, field_, nvars_).first;
    it->second.terms_.emplace(f, c);
  }
  return out;
}

bool operator==(const MPoly& a, const MPoly& b) {
  return a.nvars_ == b.nvars_ && same_field(a.field_, b.field_) && a.terms_ == b.terms_;
}

std::span<const std::string_view> default_variable_names(int nvars) {
  static constexpr std::array<std::string_view, 3> proj{"X", "Y", "Z"};
  static constexpr std::array<std::string_view, 3> affine{"x", "y", "z"};
  if (nvars == 3) return proj;
  return std::span<const std::string_view>(affine.data(), static_cast<std::size_t>(nvars));
}

std::string MPoly::to_string() const { return to_string(default_variable_names(nvars_)); }

std::string MPoly::to_string(std::span<const std::string_view> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      const auto k = e[static_cast<std::size_t>(i)];
      if (k == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[static_cast<std::size_t>(i)];
      if (k > 1) mono += "^" + std::to_string(k);
    }
    const bool negative = c.prints_as_atom() && c.sign() < 0;
    const FieldElement mag = negative ? -c : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      os << mag.to_string();
    } else if (mag.is_one()) {
      os << mono;
    } else {
      os << mag.to_string() << "*" << mono;
    }
  }
  return os.str();
}

// ---------------------------------------------------------- canonical scaling

namespace {

FieldElement canonical_factor(std::span<const MPoly> polys) {
  const MPoly* first = nullptr;
  for (const auto& p : polys) {
    if (!p.is_zero()) {
      first = &p;
      break;
    }
  }
  if (first == nullptr) throw Error(ErrorCode::AllZero, "cannot scale the zero polynomial");
  const FieldPtr& field = first->field();
  if (!field->is_rational()) return first->leading_coefficient().inverse();
  Integer l = 1;
  for (const auto& p : polys) {
    for (const auto& [e, c] : p.terms()) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational_part().get_den_mpz_t());
    }
  }
  Integer g = 0;
  for (const auto& p : polys) {
    for (const auto& [e, c] : p.terms()) {
      const Rational& r = c.rational_part();
      Integer n = r.get_num() * (l / r.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
  }
  Rational s = make_rational(l, g);
  if (first->leading_coefficient().sign() < 0) s = -s;
  return FieldElement(field, s);
}

}  // namespace

void canonicalize(std::span<MPoly> polys) {
  const FieldElement s = canonical_factor(polys);
  if (s.is_one()) return;
  for (auto& p : polys) p = p.scaled(s);
}

MPoly canonical(MPoly p) {
  if (p.is_zero()) return p;
  canonicalize(std::span<MPoly>(&p, 1));
  return p;
}

// ---------------------------------------------------------------- division

MPoly exact_divide(const MPoly& p, const MPoly& d) {
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
  if (p.nvars() != d.nvars()) throw Error(ErrorCode::ArityMismatch, "polynomials have different arity");
  const FieldPtr& field = p.field();
  MPoly q(field, p.nvars());
  if (p.is_zero()) return q;
  if (d.is_monomial()) {
    const auto& [de, dc] = *d.terms().begin();
    const FieldElement inv = dc.inverse();
    for (const auto& [e, c] : p.terms()) {
      if (!divides(de, e)) throw Error(ErrorCode::NotExact, "monomial does not divide polynomial");
      q.add_term(sub(e, de), c * inv);
    }
    return q;
  }
  const Exponents& de = d.leading_exponents();
  const FieldElement inv = d.leading_coefficient().inverse();
  MPoly r = p;
  while (!r.is_zero()) {
    const Exponents& re = r.leading_exponents();
    if (!divides(de, re)) throw Error(ErrorCode::NotExact, "divisor does not divide polynomial");
    const Exponents shift = sub(re, de);
    const FieldElement f = r.leading_coefficient() * inv;
    q.add_term(shift, f);
    r -= d.shifted(shift).scaled(f);
  }
  return q;
}

// ---------------------------------------------------------------- gcd

namespace {

MPoly one_like(const MPoly& p) { return MPoly::constant(p.field(), p.nvars(), 1); }

bool involves(const MPoly& p, int var) { return p.degree_in(var) > 0; }

MPoly lc_in(const MPoly& p, int var) { return p.coefficients_in(var).rbegin()->second; }

// Remainder of a by b, both involving only var, over the coefficient field.
MPoly univariate_rem(MPoly a, const MPoly& b, int var) {
  const std::int64_t db = b.degree_in(var);
  const FieldElement inv = b.leading_coefficient().inverse();
  while (!a.is_zero() && a.degree_in(var) >= db) {
    const std::int64_t k = a.degree_in(var) - db;
    const FieldElement f = a.leading_coefficient() * inv;
    a -= b.shifted(unit(var, k)).scaled(f);
  }
  return a;
}

MPoly univariate_gcd(MPoly a, MPoly b, int var) {
  while (!b.is_zero()) {
    MPoly r = univariate_rem(a, b, var);
    a = std::move(b);
    b = std::move(r);
  }
  return a.scaled(a.leading_coefficient().inverse());
}

// lc(b)^(deg a - deg b + 1) * a mod b, the exact pseudo-remainder in var.
MPoly pseudo_rem(MPoly a, const MPoly& b, int var) {
  const std::int64_t db = b.degree_in(var);
  const MPoly lcb = lc_in(b, var);
  std::int64_t steps = a.degree_in(var) - db + 1;
  while (!a.is_zero() && a.degree_in(var) >= db) {
    const std::int64_t k = a.degree_in(var) - db;
    const MPoly lca = lc_in(a, var);
    a = a * lcb - b.shifted(unit(var, k)) * lca;
    --steps;
  }
  if (steps > 0 && !a.is_zero()) a = a * lcb.pow(static_cast<std::uint64_t>(steps));
  return a;
}

MPoly gcd_rec(const MPoly& a, const MPoly& b);

MPoly content_in(const MPoly& p, int var) {
  auto coeffs = p.coefficients_in(var);
  auto it = coeffs.begin();
  MPoly g = canonical(it->second);
  for (++it; it != coeffs.end() && !g.is_constant(); ++it) g = gcd_rec(g, it->second);
  return g;
}

MPoly primitive_in(const MPoly& p, int var) { return canonical(exact_divide(p, content_in(p, var))); }

MPoly gcd_rec(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return canonical(b);
  if (b.is_zero()) return canonical(a);
  if (a.is_constant() || b.is_constant()) return one_like(a);

  const Exponents ca = a.monomial_content();
  const Exponents cb = b.monomial_content();
  if (ca != Exponents{0, 0, 0} || cb != Exponents{0, 0, 0}) {
    Exponents m;
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(ca[i], cb[i]);
    const MPoly sa = exact_divide(a, MPoly::monomial(a.field(), a.nvars(), ca, FieldElement(a.field(), 1L)));
    const MPoly sb = exact_divide(b, MPoly::monomial(b.field(), b.nvars(), cb, FieldElement(b.field(), 1L)));
    return canonical(gcd_rec(sa, sb).shifted(m));
  }

  int main_var = -1;
  int count = 0;
  for (int v = 0; v < a.nvars(); ++v) {
    const bool in_a = involves(a, v);
    const bool in_b = involves(b, v);
    if (in_a && !in_b) return gcd_rec(content_in(a, v), b);
    if (in_b && !in_a) return gcd_rec(a, content_in(b, v));
    if (in_a) {
      if (main_var < 0) main_var = v;
      ++count;
    }
  }
  if (count == 1) return canonical(univariate_gcd(a, b, main_var));

  const MPoly cont_a = content_in(a, main_var);
  const MPoly cont_b = content_in(b, main_var);
  const MPoly c = gcd_rec(cont_a, cont_b);
  MPoly pa = canonical(exact_divide(a, cont_a));
  MPoly pb = canonical(exact_divide(b, cont_b));
  if (pa.degree_in(main_var) < pb.degree_in(main_var)) std::swap(pa, pb);
  // Subresultant PRS: every division below is exact.
  MPoly g = one_like(pa);
  MPoly h = one_like(pa);
  while (true) {
    const std::int64_t delta = pa.degree_in(main_var) - pb.degree_in(main_var);
    MPoly r = pseudo_rem(pa, pb, main_var);
    if (r.is_zero()) break;
    if (!involves(r, main_var)) return c;
    pa = std::move(pb);
    pb = exact_divide(r, g * h.pow(static_cast<std::uint64_t>(delta)));
    g = lc_in(pa, main_var);
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = exact_divide(g.pow(static_cast<std::uint64_t>(delta)), h.pow(static_cast<std::uint64_t>(delta - 1)));
    }
  }
  return canonical(c * primitive_in(pb, main_var));
}

// Sound coprimality certificate: specialise all but one variable at a point
// where some input keeps its leading coefficient in that variable. If the
// univariate images are coprime for every variable, the true gcd has degree
// zero in every variable.
bool certify_coprime(std::span<const MPoly> polys) {
  const int n = polys[0].nvars();
  const FieldPtr& field = polys[0].field();
  static constexpr long kSamples[][2] = {{2, 3}, {5, -7}, {-11, 13}, {17, 19}};
  for (int v = 0; v < n; ++v) {
    bool any = false;
    for (const auto& p : polys) any = any || involves(p, v);
    if (!any) continue;
    bool certified = false;
    for (const auto& sample : kSamples) {
      std::vector<MPoly> images;
      bool lc_kept = false;
      for (const auto& p : polys) {
        MPoly img = p;
        int slot = 0;
        for (int w = 0; w < n; ++w) {
          if (w == v) continue;
          img = img.specialize(w, FieldElement(field, sample[slot++]));
        }
        if (involves(p, v) && img.degree_in(v) == p.degree_in(v)) lc_kept = true;
        if (!img.is_zero()) images.push_back(std::move(img));
      }
      if (!lc_kept) continue;
      MPoly g = images[0];
      for (std::size_t i = 1; i < images.size() && involves(g, v); ++i) {
        g = univariate_gcd(g, images[i], v);
      }
      if (!involves(g, v)) certified = true;
      break;
    }
    if (!certified) return false;
  }
  return true;
}

}  // namespace

MPoly mp_gcd(std::span<const MPoly> polys) {
  std::vector<MPoly> nonzero;
  for (const auto& p : polys) {
    if (p.nvars() != polys[0].nvars()) throw Error(ErrorCode::ArityMismatch, "gcd inputs differ in arity");
    if (!p.is_zero()) nonzero.push_back(p);
  }
  if (nonzero.empty()) throw Error(ErrorCode::AllZero, "gcd of zero polynomials");
  if (nonzero.size() == 1) return canonical(nonzero[0]);

  const FieldPtr field = nonzero[0].field();
  const int n = nonzero[0].nvars();
  Exponents m = nonzero[0].monomial_content();
  for (const auto& p : nonzero) {
    const Exponents c = p.monomial_content();
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], c[i]);
  }
  const MPoly mono = MPoly::monomial(field, n, m, FieldElement(field, 1L));
  std::vector<MPoly> stripped;
  for (const auto& p : nonzero) {
    MPoly s = exact_divide(p, MPoly::monomial(field, n, p.monomial_content(), FieldElement(field, 1L)));
    if (s.is_constant()) return mono;
    stripped.push_back(std::move(s));
  }
  if (certify_coprime(stripped)) return mono;
  MPoly g = stripped[0];
  for (std::size_t i = 1; i < stripped.size() && !g.is_constant(); ++i) g = gcd_rec(g, stripped[i]);
  return canonical(g * mono);
}

MPoly mp_gcd(const MPoly& a, const MPoly& b) {
  const std::array<MPoly, 2> ps{a, b};
  return mp_gcd(ps);
}

// ---------------------------------------------------------------- resultant

MPoly resultant(const MPoly& p, const MPoly& q, int var) {
  if (p.nvars() != q.nvars()) throw Error(ErrorCode::ArityMismatch, "resultant arity");
  if (var < 0 || var >= p.nvars()) throw Error(ErrorCode::VarOutOfRange, "resultant variable out of range");
  if (p.is_zero() || q.is_zero()) throw Error(ErrorCode::ZeroInput, "resultant of a zero polynomial");
  const FieldPtr& field = p.field();
  const int n = p.nvars();
  const auto pc = p.coefficients_in(var);
  const auto qc = q.coefficients_in(var);
  const std::int64_t dp = p.degree_in(var);
  const std::int64_t dq = q.degree_in(var);
  const auto size = static_cast<std::size_t>(dp + dq);
  std::vector<std::vector<MPoly>> syl(size, std::vector<MPoly>(size, MPoly(field, n)));
  for (std::int64_t r = 0; r < dq; ++r) {
    for (const auto& [k, c] : pc) syl[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + dp - k)] = c;
  }
  for (std::int64_t r = 0; r < dp; ++r) {
    for (const auto& [k, c] : qc) {
      syl[static_cast<std::size_t>(dq + r)][static_cast<std::size_t>(r + dq - k)] = c;
    }
  }
  MPoly res = determinant(std::move(syl), field, n);
  if (!res.is_zero() && res.leading_coefficient().sign() < 0) res = -res;
  return res;
}

// ---------------------------------------------------------------- triples

HomogeneousTriple::HomogeneousTriple(MPoly f0, MPoly f1, MPoly f2)
    : forms_{std::move(f0), std::move(f1), std::move(f2)} {
  bool seen = false;
  for (const auto& f : forms_) {
    if (f.nvars() != 3) throw Error(ErrorCode::ArityMismatch, "forms must be in X, Y, Z");
    if (!same_field(f.field(), forms_[0].field())) throw Error(ErrorCode::FieldMismatch, "forms over different fields");
    if (f.is_zero()) continue;
    if (!f.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, f.to_string() + " is not homogeneous");
    const std::int64_t d = f.total_degree();
    if (seen && d != degree_) throw Error(ErrorCode::DegreeMismatch, "forms have different degrees");
    degree_ = d;
    seen = true;
  }
  if (!seen) throw Error(ErrorCode::AllZero, "all three forms vanish");
}

bool HomogeneousTriple::is_monomial() const {
  return std::all_of(forms_.begin(), forms_.end(), [](const MPoly& f) { return f.size() <= 1; });
}

std::string HomogeneousTriple::to_string() const {
  return "[" + forms_[0].to_string() + " : " + forms_[1].to_string() + " : " + forms_[2].to_string() + "]";
}

// ---------------------------------------------------------- rational functions

RationalFunction::RationalFunction(MPoly num) : RationalFunction(num, MPoly::constant(num.field(), num.nvars(), 1)) {}

RationalFunction::RationalFunction(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::ZeroDenominator, "zero denominator");
  if (num_.nvars() != den_.nvars()) throw Error(ErrorCode::ArityMismatch, "numerator and denominator arity");
  if (num_.is_zero()) {
    den_ = MPoly::constant(num_.field(), num_.nvars(), 1);
    return;
  }
  if (!den_.is_constant()) {
    const MPoly g = mp_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_divide(num_, g);
      den_ = exact_divide(den_, g);
    }
  }
  const MPoly d = den_;
  const MPoly c = canonical(d);
  // c = s * d for the scalar s = lc(c)/lc(d); scale the numerator likewise.
  const FieldElement s = c.leading_coefficient() / d.leading_coefficient();
  den_ = c;
  num_ = num_.scaled(s);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::pow(std::int64_t e) const {
  if (e >= 0) return RationalFunction(num_.pow(static_cast<std::uint64_t>(e)), den_.pow(static_cast<std::uint64_t>(e)));
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
  return RationalFunction(den_.pow(static_cast<std::uint64_t>(-e)), num_.pow(static_cast<std::uint64_t>(-e)));
}

RationalFunction RationalFunction::compose(std::span<const MPoly> values) const {
  return RationalFunction(num_.compose(values), den_.compose(values));
}

std::string RationalFunction::to_string(std::span<const std::string_view> names) const {
  if (is_polynomial() && den_.leading_coefficient().is_one()) return num_.to_string(names);
  return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

// ---------------------------------------------------------- homogenization

namespace {

MPoly homogenize(const MPoly& p, std::int64_t degree) {
  MPoly h(p.field(), 3);
  for (const auto& [e, c] : p.terms()) {
    const std::int64_t rest = degree - add_exponents(e[0], e[1]);
    h.add_term({e[0], e[1], rest}, c);
  }
  return h;
}

std::pair<MPoly, MPoly> homogenize_ratio(const RationalFunction& f) {
  const FieldPtr& field = f.field();
  if (f.is_zero()) return {MPoly(field, 3), MPoly::constant(field, 3, 1)};
  const std::int64_t dp = f.num().total_degree();
  const std::int64_t dq = f.den().total_degree();
  MPoly a = homogenize(f.num(), dp);
  MPoly b = homogenize(f.den(), dq);
  const std::int64_t e = dq - dp;
  if (e > 0) a = a.shifted({0, 0, e});
  if (e < 0) b = b.shifted({0, 0, -e});
  return {a, b};
}

}  // namespace

HomogeneousTriple homogenize_affine_pair(const RationalFunction& f, const RationalFunction& g) {
  if (f.nvars() != 2 || g.nvars() != 2) throw Error(ErrorCode::ArityMismatch, "affine maps use x and y");
  if (!same_field(f.field(), g.field())) throw Error(ErrorCode::FieldMismatch, "affine pair over different fields");
  auto [a, b] = homogenize_ratio(f);
  auto [c, d] = homogenize_ratio(g);
  std::array<MPoly, 3> forms{a * d, c * b, b * d};
  const MPoly gcd = mp_gcd(forms);
  if (!gcd.is_constant()) {
    for (auto& form : forms) form = exact_divide(form, gcd);
  }
  canonicalize(forms);
  return HomogeneousTriple(forms[0], forms[1], forms[2]);
}

MPoly jacobian_det(const HomogeneousTriple& t) {
  std::array<std::array<MPoly, 3>, 3> j{{{t[0].derivative(0), t[0].derivative(1), t[0].derivative(2)},
                                        {t[1].derivative(0), t[1].derivative(1), t[1].derivative(2)},
                                        {t[2].derivative(0), t[2].derivative(1), t[2].derivative(2)}}};
  return j[0][0] * (j[1][1] * j[2][2] - j[1][2] * j[2][1]) - j[0][1] * (j[1][0] * j[2][2] - j[1][2] * j[2][0]) +
         j[0][2] * (j[1][0] * j[2][1] - j[1][1] * j[2][0]);
}

// ---------------------------------------------------------- common zeros

bool has_common_projective_zero_monomial(const HomogeneousTriple& t) {
  // A point of P^2 lies in exactly one torus stratum, given by the set S of
  // vanishing coordinates (|S| = 1 or 2). A monomial vanishes on the stratum
  // iff it has a positive exponent on some variable of S; a zero form vanishes
  // everywhere.
  static constexpr std::array<std::array<bool, 3>, 6> strata{{{true, false, false},
                                                              {false, true, false},
                                                              {false, false, true},
                                                              {true, true, false},
                                                              {true, false, true},
                                                              {false, true, true}}};
  for (const auto& s : strata) {
    bool all_vanish = true;
    for (const auto& f : t.forms()) {
      if (f.is_zero()) continue;
      const Exponents& e = f.leading_exponents();
      const bool vanishes = (s[0] && e[0] > 0) || (s[1] && e[1] > 0) || (s[2] && e[2] > 0);
      if (!vanishes) {
        all_vanish = false;
        break;
      }
    }
    if (all_vanish) return true;
  }
  return false;
}

bool has_common_projective_zero_macaulay(const HomogeneousTriple& t) {
  const std::int64_t d = t.degree();
  if (d == 0) return false;  // some form is a nonzero constant
  const std::int64_t big_n = 3 * d - 2;
  if (big_n > 400) throw Error(ErrorCode::DegreeCapExceeded, "Macaulay matrix too large");
  const FieldPtr& field = t.field();

  std::map<Exponents, std::size_t> column;
  for (std::int64_t a = big_n; a >= 0; --a) {
    for (std::int64_t b = big_n - a; b >= 0; --b) column.emplace(Exponents{a, b, big_n - a - b}, column.size());
  }
  const std::int64_t shift_deg = big_n - d;
  std::vector<std::vector<FieldElement>> rows;
  for (const auto& f : t.forms()) {
    if (f.is_zero()) continue;
    for (std::int64_t a = shift_deg; a >= 0; --a) {
      for (std::int64_t b = shift_deg - a; b >= 0; --b) {
        std::vector<FieldElement> row(column.size(), FieldElement(field));
        const Exponents shift{a, b, shift_deg - a - b};
        for (const auto& [e, c] : f.terms()) row[column.at(add(e, shift))] = c;
        rows.push_back(std::move(row));
      }
    }
  }
  if (rows.size() < column.size()) return true;
  return exact_rank(std::move(rows)) < column.size();
}

bool has_common_projective_zero(const HomogeneousTriple& t) {
  if (t.is_monomial()) return has_common_projective_zero_monomial(t);
  // A rational witness settles the question without the Macaulay matrix,
  // whose exact rank is expensive precisely when it is deficient.
  static constexpr long kWitnesses[][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0},
                                           {1, 0, 1}, {0, 1, 1}, {1, -1, 0}, {1, 0, -1}, {0, 1, -1}};
  const FieldPtr& field = t.field();
  for (const auto& w : kWitnesses) {
    const std::array<FieldElement, 3> p{FieldElement(field, w[0]), FieldElement(field, w[1]), FieldElement(field, w[2])};
    if (std::all_of(t.forms().begin(), t.forms().end(), [&](const MPoly& f) { return f.evaluate(p).is_zero(); })) {
      return true;
    }
  }
  return has_common_projective_zero_macaulay(t);
}

}  // namespace evreg
