#include "evreg/skewprod.hpp"

#include <algorithm>
#include <set>

#include "evreg/error.hpp"
#include "evreg/linalg.hpp"
#include "evreg/zeros.hpp"

namespace evreg {

namespace {

using FiberPoly = std::vector<RationalFunction>;  // coefficients of y^i

RationalFunction rf_constant(const FieldPtr& field, const FieldElement& c) {
  return RationalFunction(MPoly::constant(field, 1, c));
}

FiberPoly fiber_mul(const FiberPoly& a, const FiberPoly& b) {
  const FieldPtr& field = a[0].field();
  FiberPoly out(a.size() + b.size() - 1, rf_constant(field, FieldElement(field)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b[j].is_zero()) out[i + j] = out[i + j] + a[i] * b[j];
    }
  }
  return out;
}

MPoly to_univariate(const MPoly& p) {
  MPoly out(p.field(), 1);
  for (const auto& [e, c] : p.terms()) out.add_term({e[0], 0, 0}, c);
  return out;
}

}  // namespace

// ---------------------------------------------------------------- skew maps

SkewMap::SkewMap(MPoly phi, std::vector<RationalFunction> coeffs) : phi_(std::move(phi)), coeffs_(std::move(coeffs)) {
  if (phi_.nvars() != 1) throw Error(ErrorCode::ArityMismatch, "base map must be univariate");
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (coeffs_.size() < 2) throw Error(ErrorCode::DegreeMismatch, "fiber map must have degree >= 1 in y");
  for (const auto& c : coeffs_) {
    if (c.nvars() != 1) throw Error(ErrorCode::ArityMismatch, "fiber coefficients must be univariate in x");
    if (!same_field(c.field(), phi_.field())) throw Error(ErrorCode::FieldMismatch, "skew map over two fields");
  }
}

SkewMap SkewMap::from_pair(const MPoly& phi, const RationalFunction& f) {
  if (f.nvars() != 2) throw Error(ErrorCode::ArityMismatch, "fiber map takes x and y");
  if (f.den().degree_in(1) > 0) throw Error(ErrorCode::DegreeMismatch, "fiber map denominator may only involve x");
  const MPoly den = to_univariate(f.den());
  const auto by_y = f.num().coefficients_in(1);
  const std::int64_t d = by_y.empty() ? 0 : by_y.rbegin()->first;
  std::vector<RationalFunction> coeffs(static_cast<std::size_t>(d + 1), RationalFunction(MPoly(phi.field(), 1)));
  for (const auto& [i, c] : by_y) coeffs[static_cast<std::size_t>(i)] = RationalFunction(to_univariate(c), den);
  return SkewMap(phi, std::move(coeffs));
}

RationalFunction SkewMap::fiber_function() const {
  const FieldPtr& field = phi_.field();
  RationalFunction out(MPoly(field, 2));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const MPoly yi = MPoly::monomial(field, 2, {0, static_cast<std::int64_t>(i), 0}, FieldElement(field, 1L));
    out = out + RationalFunction(coeffs_[i].num().with_nvars(2) * yi, coeffs_[i].den().with_nvars(2));
  }
  return out;
}

SkewMap skew_iterate(const SkewMap& f, int n, std::int64_t fiber_degree_cap) {
  if (n < 1) throw Error(ErrorCode::ZeroInput, "iterate count must be positive");
  const auto d = static_cast<std::int64_t>(f.fiber_degree());
  MPoly phi_k = f.phi();
  FiberPoly cur = f.coeffs();
  std::int64_t degree = d;
  for (int step = 2; step <= n; ++step) {
    degree = mul_exponents(degree, d);
    if (degree > fiber_degree_cap) {
      throw Error(ErrorCode::DegreeCapExceeded, "fiber degree " + std::to_string(degree) + " exceeds cap");
    }
    const std::array<MPoly, 1> at{phi_k};
    FiberPoly next{f.coeffs()[0].compose(at)};
    FiberPoly power = cur;
    for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
      if (i > 1) power = fiber_mul(power, cur);
      const RationalFunction ai = f.coeffs()[i].compose(at);
      if (ai.is_zero()) continue;
      if (next.size() < power.size()) next.resize(power.size(), RationalFunction(MPoly(f.field(), 1)));
      for (std::size_t j = 0; j < power.size(); ++j) {
        if (!power[j].is_zero()) next[j] = next[j] + ai * power[j];
      }
    }
    cur = std::move(next);
    phi_k = f.phi().compose(at);
  }
  return SkewMap(phi_k, cur);
}

bool leading_coeff_identity_check(const SkewMap& f, int k, std::int64_t fiber_degree_cap) {
  const RationalFunction lhs = skew_iterate(f, k, fiber_degree_cap).coeffs().back();
  const FieldPtr& field = f.field();
  const RationalFunction& ad = f.coeffs().back();
  RationalFunction rhs = rf_constant(field, FieldElement(field, 1L));
  MPoly phi_i = MPoly::variable(field, 1, 0);
  const auto d = static_cast<std::int64_t>(f.fiber_degree());
  for (int i = 0; i < k; ++i) {
    std::int64_t e = 1;
    for (int j = 0; j < k - 1 - i; ++j) e = mul_exponents(e, d);
    const std::array<MPoly, 1> at{phi_i};
    rhs = rhs * ad.compose(at).pow(e);
    phi_i = f.phi().compose(at);
  }
  return lhs == rhs;
}

// ---------------------------------------------------------------- triangular

TriangularMap::TriangularMap(FieldElement a, FieldElement c, MPoly q) : a_(std::move(a)), c_(std::move(c)), q_(std::move(q)) {
  if (a_.is_zero() || c_.is_zero()) throw Error(ErrorCode::ZeroInput, "a and c must be nonzero");
  if (q_.nvars() != 1) throw Error(ErrorCode::ArityMismatch, "q must be a polynomial in y alone");
  if (!same_field(a_.field(), c_.field()) || !same_field(a_.field(), q_.field())) {
    throw Error(ErrorCode::FieldMismatch, "triangular map over two fields");
  }
}

SkewMap TriangularMap::as_skew() const {
  const FieldPtr& field = a_.field();
  return SkewMap(MPoly::variable(field, 1, 0).scaled(c_),
                 {RationalFunction(q_), RationalFunction(MPoly::constant(field, 1, a_))});
}

MPoly triangular_x_part(const TriangularMap& t, int k) {
  if (k < 1) throw Error(ErrorCode::ZeroInput, "iterate count must be positive");
  MPoly qk = t.q();
  FieldElement ck = t.c();  // c^(step-1)
  for (int step = 2; step <= k; ++step) {
    MPoly shifted(t.field(), 1);
    for (const auto& [e, m] : t.q().terms()) shifted.add_term(e, m * ck.pow(e[0]));
    qk = qk.scaled(t.a()) + shifted;
    ck *= t.c();
  }
  return qk;
}

std::optional<int> first_linear_iterate(const TriangularMap& t, int cap) {
  for (int k = 1; k <= cap; ++k) {
    if (triangular_x_part(t, k).total_degree() <= 1) return k;
  }
  return std::nullopt;
}

FieldElement triangular_coefficient_closed_form(const TriangularMap& t, int k) {
  if (k < 1) throw Error(ErrorCode::ZeroInput, "iterate count must be positive");
  if (t.q().size() != 1 || t.q().total_degree() < 1) {
    throw Error(ErrorCode::ClosedFormInvalid, "q must be a single term m*y^j with j >= 1");
  }
  const std::int64_t j = t.q().total_degree();
  const FieldElement& m = t.q().leading_coefficient();
  const FieldElement cj = t.c().pow(j);
  if (t.a() == cj) throw Error(ErrorCode::ClosedFormInvalid, "a = c^j");
  return m * (t.a().pow(static_cast<std::int64_t>(k)) - cj.pow(static_cast<std::int64_t>(k))) / (t.a() - cj);
}

FieldElement triangular_coefficient(const TriangularMap& t, int k) {
  try {
    return triangular_coefficient_closed_form(t, k);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ClosedFormInvalid || t.q().size() != 1 || t.q().total_degree() < 1) throw;
  }
  return triangular_x_part(t, k).coefficient({t.q().total_degree(), 0, 0});
}

// ---------------------------------------------------------------- independence

Independence mult_indep_rationals(const std::vector<Rational>& r) {
  for (const auto& x : r) {
    if (x == 0) throw Error(ErrorCode::ZeroInput, "multiplicative independence of zero");
  }
  Independence out;
  if (r.empty()) return out;

  // Coprime base by factor refinement of all numerators and denominators.
  std::set<Integer> base;
  for (const auto& x : r) {
    for (const Integer& v : {Integer(abs(x.get_num())), Integer(x.get_den())}) {
      if (v > 1) base.insert(v);
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (auto i = base.begin(); i != base.end() && !changed; ++i) {
      for (auto j = std::next(i); j != base.end() && !changed; ++j) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), i->get_mpz_t(), j->get_mpz_t());
        if (g == 1) continue;
        const Integer x = *i;
        const Integer y = *j;
        base.erase(x);
        base.erase(y);
        for (const Integer& w : {Integer(x / g), Integer(y / g), g}) {
          if (w > 1) base.insert(w);
        }
        changed = true;
      }
    }
  }

  auto valuation = [](Integer n, const Integer& b) {
    Integer k = 0;
    while (mpz_divisible_p(n.get_mpz_t(), b.get_mpz_t())) {
      mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), b.get_mpz_t());
      ++k;
    }
    return k;
  };

  const std::size_t n = r.size();
  const std::vector<Integer> bases(base.begin(), base.end());
  IntegerMatrix rows(n + 1, std::vector<Integer>(bases.size() + 1, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t b = 0; b < bases.size(); ++b) {
      rows[i][b] = valuation(abs(r[i].get_num()), bases[b]) - valuation(r[i].get_den(), bases[b]);
    }
    rows[i][bases.size()] = r[i] < 0 ? 1 : 0;
  }
  rows[n][bases.size()] = 2;  // the sign lives in Z/2

  for (const auto& k : integer_left_kernel(rows)) {
    std::vector<Integer> e(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(n));
    Integer g = 0;
    for (const auto& x : e) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) continue;
    for (auto& x : e) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    auto product = [&](const std::vector<Integer>& ex) {
      Rational p = 1;
      for (std::size_t i = 0; i < n; ++i) {
        const FieldElement v = FieldElement(NumberField::rationals(), r[i]).pow(ex[i]);
        p *= v.rational_part();
      }
      return p;
    };
    // Absolute values carry no torsion, so the primitive vector is a relation
    // up to sign; doubling fixes a sign of -1.
    if (product(e) != 1) {
      for (auto& x : e) x *= 2;
    }
    if (product(e) != 1) throw Error(ErrorCode::CertificateViolation, "kernel vector is not a relation");
    const auto first = std::find_if(e.begin(), e.end(), [](const Integer& x) { return x != 0; });
    if (*first < 0) {
      for (auto& x : e) x = -x;
    }
    out.independent = false;
    out.witness = std::move(e);
    return out;
  }
  return out;
}

// ---------------------------------------------------------------- classifier

std::string_view to_string(LinearCase c) {
  switch (c) {
    case LinearCase::CaseA: return "CaseA";
    case LinearCase::CaseB: return "CaseB";
    case LinearCase::Neither: return "Neither";
    case LinearCase::UnsupportedEigenvalues: return "UnsupportedEigenvalues";
  }
  return "?";
}

LinearAutoClass classify_linear_auto(const Matrix3& a) {
  auto det3 = [](const Matrix3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  const FieldElement det = det3(a);
  if (det.is_zero()) throw Error(ErrorCode::NotInvertible, "matrix is singular");
  LinearAutoClass out;
  for (const auto& row : a) {
    for (const auto& e : row) {
      if (!e.is_rational()) {
        out.which = LinearCase::UnsupportedEigenvalues;
        return out;
      }
    }
  }
  const FieldPtr q = NumberField::rationals();
  std::array<std::array<Rational, 3>, 3> m;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) m[i][j] = a[i][j].rational_part();
  }
  const Rational tr = m[0][0] + m[1][1] + m[2][2];
  const Rational minors = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] - m[0][2] * m[2][0] +
                          m[1][1] * m[2][2] - m[1][2] * m[2][1];
  MPoly chi(q, 1);
  chi.add_term({3, 0, 0}, FieldElement(q, 1L));
  chi.add_term({2, 0, 0}, FieldElement(q, Rational(-tr)));
  chi.add_term({1, 0, 0}, FieldElement(q, minors));
  chi.add_term({0, 0, 0}, FieldElement(q, Rational(-det.rational_part())));
  const UnivariateRoots roots = roots_in_field(chi, 0);
  if (!roots.splits) {
    out.which = LinearCase::UnsupportedEigenvalues;
    return out;
  }

  auto rank_of_power = [&](const Rational& mu, int j) {
    std::vector<std::vector<FieldElement>> n(3, std::vector<FieldElement>(3, FieldElement(q)));
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) n[r][c] = FieldElement(q, Rational(m[r][c] - (r == c ? mu : Rational(0))));
    }
    std::vector<std::vector<FieldElement>> p = n;
    for (int step = 1; step < j; ++step) {
      std::vector<std::vector<FieldElement>> next(3, std::vector<FieldElement>(3, FieldElement(q)));
      for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
          for (std::size_t k = 0; k < 3; ++k) next[r][c] += p[r][k] * n[k][c];
        }
      }
      p = std::move(next);
    }
    return static_cast<int>(exact_rank(p));
  };

  for (const auto& [value, mult] : roots.roots) {
    EigenBlock eb{value.rational_part(), {}};
    std::vector<int> at_least(static_cast<std::size_t>(mult) + 2, 0);
    int prev = 3;
    for (int j = 1; j <= mult + 1; ++j) {
      const int rk = rank_of_power(eb.value, j);
      at_least[static_cast<std::size_t>(j)] = prev - rk;
      prev = rk;
    }
    for (int j = mult; j >= 1; --j) {
      const int exactly = at_least[static_cast<std::size_t>(j)] - at_least[static_cast<std::size_t>(j + 1)];
      for (int c = 0; c < exactly; ++c) eb.block_sizes.push_back(j);
    }
    out.eigen_data.push_back(std::move(eb));
  }

  out.which = LinearCase::Neither;
  if (out.eigen_data.size() == 2) {
    const EigenBlock* two = nullptr;
    const EigenBlock* one = nullptr;
    for (const auto& eb : out.eigen_data) {
      if (eb.block_sizes == std::vector<int>{2}) two = &eb;
      if (eb.block_sizes == std::vector<int>{1}) one = &eb;
    }
    if (two != nullptr && one != nullptr) {
      const Rational ratio = two->value / one->value;
      if (ratio != 1 && ratio != -1) out.which = LinearCase::CaseA;
    }
  }
  const bool diagonalizable = std::all_of(out.eigen_data.begin(), out.eigen_data.end(), [](const EigenBlock& eb) {
    return std::all_of(eb.block_sizes.begin(), eb.block_sizes.end(), [](int s) { return s == 1; });
  });
  if (diagonalizable) {
    std::vector<Rational> eig;
    for (const auto& eb : out.eigen_data) {
      for (std::size_t i = 0; i < eb.block_sizes.size(); ++i) eig.push_back(eb.value);
    }
    // Projective normalization: divide by the last eigenvalue.
    const std::vector<Rational> ratios{eig[0] / eig[2], eig[1] / eig[2]};
    if (mult_indep_rationals(ratios).independent) out.which = LinearCase::CaseB;
  }
  return out;
}

}  // namespace evreg
