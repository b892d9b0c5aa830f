#include "evreg/zeros.hpp"

#include <algorithm>
#include <optional>

#include "evreg/error.hpp"

namespace evreg {

// ---------------------------------------------------------------- points

ProjPoint::ProjPoint(FieldElement x, FieldElement y, FieldElement z) : coords_{std::move(x), std::move(y), std::move(z)} {
  for (std::size_t i = 0; i < 3; ++i) {
    if (coords_[i].is_zero()) continue;
    if (!coords_[i].is_one()) {
      const FieldElement inv = coords_[i].inverse();
      for (auto& c : coords_) c *= inv;
    }
    return;
  }
  throw Error(ErrorCode::AllZero, "[0:0:0] is not a point of P^2");
}

ProjPoint ProjPoint::from_rationals(const FieldPtr& field, long x, long y, long z) {
  return ProjPoint(FieldElement(field, x), FieldElement(field, y), FieldElement(field, z));
}

bool operator<(const ProjPoint& a, const ProjPoint& b) {
  for (std::size_t i = 0; i < 3; ++i) {
    const int c = compare(a.coords_[i], b.coords_[i]);
    if (c != 0) return c > 0;
  }
  return false;
}

std::string ProjPoint::to_string() const {
  return "[" + coords_[0].to_string() + ":" + coords_[1].to_string() + ":" + coords_[2].to_string() + "]";
}

// ---------------------------------------------------------------- roots

namespace {

using IntPoly = std::vector<Integer>;  // constant term first

// Divisors of |n| (n != 0). Trial division up to 10^6; a leftover cofactor is
// treated as prime. That can only lose candidates, never invent roots, and a
// lost root shows up as a failed splitting check.
std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<std::pair<Integer, int>> factors;
  for (unsigned long p = 2; p <= 1000000 && Integer(p) * p <= n; ++p) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      int k = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++k;
      }
      factors.emplace_back(Integer(p), k);
    }
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<Integer> divs{1};
  for (const auto& [p, k] : factors) {
    const std::size_t base = divs.size();
    Integer pk = 1;
    for (int i = 1; i <= k; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
    if (divs.size() > 200000) break;
  }
  return divs;
}

// Is p/q a root? Evaluates sum a_i p^i q^(n-i).
bool is_root_exact(const IntPoly& a, const Integer& p, const Integer& q) {
  const std::size_t n = a.size() - 1;
  std::vector<Integer> qpows(a.size(), Integer(1));
  for (std::size_t i = 1; i < a.size(); ++i) qpows[i] = qpows[i - 1] * q;
  Integer total = 0;
  Integer ppow = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    total += a[i] * ppow * qpows[n - i];
    ppow *= p;
  }
  return total == 0;
}

// Divide the integer polynomial by (q x - p), returning the primitive quotient.
IntPoly divide_linear(const IntPoly& a, const Integer& p, const Integer& q) {
  // Work over Q and rescale.
  const std::size_t n = a.size() - 1;
  std::vector<Rational> b(n);
  const Rational r = make_rational(p, q);
  Rational carry = 0;
  for (std::size_t i = n; i-- > 0;) {
    carry = carry * r + a[i + 1];
    b[i] = carry;
  }
  Integer l = 1;
  for (const auto& c : b) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntPoly out(n);
  Integer g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = b[i].get_num() * (l / b[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g > 1) {
    for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

struct RationalRoots {
  std::vector<std::pair<Rational, int>> roots;
  int found_degree = 0;
};

RationalRoots rational_roots(std::vector<Rational> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  RationalRoots out;
  if (coeffs.size() <= 1) return out;
  Integer l = 1;
  for (const auto& c : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntPoly a(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) a[i] = coeffs[i].get_num() * (l / coeffs[i].get_den());

  int zero_mult = 0;
  while (a.size() > 1 && a[0] == 0) {
    a.erase(a.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) {
    out.roots.emplace_back(Rational(0), zero_mult);
    out.found_degree += zero_mult;
  }
  if (a.size() <= 1) return out;

  const std::vector<Integer> ps = divisors(a.front());
  const std::vector<Integer> qs = divisors(a.back());
  std::vector<Rational> candidates;
  for (const auto& q : qs) {
    for (const auto& p : ps) {
      candidates.push_back(make_rational(p, q));
      candidates.push_back(make_rational(-p, q));
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& r : candidates) {
    if (a.size() <= 1) break;
    int mult = 0;
    while (a.size() > 1 && is_root_exact(a, r.get_num(), r.get_den())) {
      a = divide_linear(a, r.get_num(), r.get_den());
      ++mult;
    }
    if (mult > 0) {
      out.roots.emplace_back(r, mult);
      out.found_degree += mult;
    }
  }
  return out;
}

std::vector<FieldElement> dense_coeffs(const MPoly& p, int var) {
  const auto d = static_cast<std::size_t>(p.degree_in(var));
  std::vector<FieldElement> c(d + 1, FieldElement(p.field()));
  for (const auto& [e, coef] : p.terms()) c[static_cast<std::size_t>(e[static_cast<std::size_t>(var)])] = coef;
  return c;
}

}  // namespace

UnivariateRoots roots_in_field(const MPoly& p, int var) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "roots of the zero polynomial");
  for (int v = 0; v < p.nvars(); ++v) {
    if (v != var && p.degree_in(v) > 0) throw Error(ErrorCode::ArityMismatch, "polynomial is not univariate");
  }
  const FieldPtr& field = p.field();
  std::vector<FieldElement> c = dense_coeffs(p, var);
  const int degree = static_cast<int>(c.size()) - 1;
  UnivariateRoots out;
  if (field->is_rational()) {
    std::vector<Rational> q;
    for (const auto& e : c) q.push_back(e.rational_part());
    RationalRoots rr = rational_roots(std::move(q));
    for (auto& [r, m] : rr.roots) out.roots.emplace_back(FieldElement(field, r), m);
    out.splits = rr.found_degree == degree;
  } else {
    // Rational roots are the common rational roots of the coordinate
    // polynomials; multiplicities are then read off over the field.
    const int n = field->degree();
    std::optional<MPoly> common;
    const FieldPtr q = NumberField::rationals();
    for (int j = 0; j < n; ++j) {
      MPoly comp(q, 1);
      for (std::size_t i = 0; i < c.size(); ++i) {
        comp.add_term({static_cast<std::int64_t>(i), 0, 0}, FieldElement(q, c[i].coeffs()[static_cast<std::size_t>(j)]));
      }
      if (comp.is_zero()) continue;
      common = common ? mp_gcd(*common, comp) : canonical(comp);
    }
    std::vector<Rational> g;
    if (common) {
      g.assign(static_cast<std::size_t>(common->degree_in(0) + 1), Rational(0));
      for (const auto& [e, coef] : common->terms()) g[static_cast<std::size_t>(e[0])] = coef.rational_part();
    }
    RationalRoots rr = rational_roots(std::move(g));
    int found = 0;
    for (auto& [r, m_unused] : rr.roots) {
      (void)m_unused;
      const FieldElement root(field, r);
      // Multiplicity over the field by repeated synthetic division.
      int mult = 0;
      std::vector<FieldElement> cur = c;
      while (cur.size() > 1) {
        std::vector<FieldElement> quo(cur.size() - 1, FieldElement(field));
        FieldElement carry(field);
        for (std::size_t i = cur.size() - 1; i-- > 0;) {
          carry = carry * root + cur[i + 1];
          quo[i] = carry;
        }
        const FieldElement rem = carry * root + cur[0];
        if (!rem.is_zero()) break;
        cur = std::move(quo);
        ++mult;
      }
      if (mult > 0) {
        out.roots.emplace_back(root, mult);
        found += mult;
      }
    }
    out.splits = found == degree;
  }
  return out;
}

// ---------------------------------------------------------------- zero sets

namespace {

constexpr int kX = 0;
constexpr int kY = 1;
constexpr int kZ = 2;

std::optional<MPoly> gcd_of_nonzero(const std::vector<MPoly>& polys) {
  std::vector<MPoly> nz;
  for (const auto& p : polys) {
    if (!p.is_zero()) nz.push_back(p);
  }
  if (nz.empty()) return std::nullopt;
  return mp_gcd(nz);
}

// x-eliminant of the affine system: gcd of the nonzero pairwise resultants in
// y (or gcds when neither polynomial involves y). Empty when every attempt
// vanishes identically.
std::optional<MPoly> x_eliminant(const std::vector<MPoly>& affine) {
  std::vector<std::pair<MPoly, MPoly>> pairs;
  for (std::size_t i = 0; i < affine.size(); ++i) {
    for (std::size_t j = i + 1; j < affine.size(); ++j) pairs.emplace_back(affine[i], affine[j]);
  }
  if (affine.size() >= 2) {
    const FieldPtr& f = affine[0].field();
    static constexpr long kMix[][3] = {{1, 2, 3}, {1, -1, 5}, {2, 7, -3}, {3, 1, 11}};
    auto mix = [&](const long* w) {
      MPoly m(f, 3);
      for (std::size_t i = 0; i < affine.size(); ++i) m += affine[i].scaled(FieldElement(f, w[i]));
      return m;
    };
    pairs.emplace_back(mix(kMix[0]), mix(kMix[1]));
    pairs.emplace_back(mix(kMix[2]), mix(kMix[3]));
  }
  std::optional<MPoly> r;
  for (const auto& [p, q] : pairs) {
    if (p.is_zero() || q.is_zero()) continue;
    MPoly e = (p.degree_in(kY) == 0 && q.degree_in(kY) == 0) ? mp_gcd(p, q) : resultant(p, q, kY);
    if (e.is_zero()) continue;
    r = r ? mp_gcd(*r, e) : canonical(e);
    if (r->is_constant()) break;
  }
  return r;
}

}  // namespace

ZeroSet rational_common_zeros(std::span<const MPoly> forms) {
  std::vector<MPoly> nonzero;
  for (const auto& f : forms) {
    if (f.nvars() != 3) throw Error(ErrorCode::ArityMismatch, "forms must be in X, Y, Z");
    if (!f.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, f.to_string() + " is not homogeneous");
    if (!f.is_zero()) nonzero.push_back(f);
  }
  if (nonzero.empty()) throw Error(ErrorCode::InfiniteZeroSet, "every form vanishes");
  const FieldPtr field = nonzero[0].field();
  ZeroSet out;
  out.complete = true;
  for (const auto& f : nonzero) {
    if (f.is_constant()) return out;
  }
  if (!mp_gcd(nonzero).is_constant()) throw Error(ErrorCode::InfiniteZeroSet, "forms share a common factor");

  const FieldElement zero(field);
  const FieldElement one(field, 1L);

  // Chart Z = 1.
  std::vector<MPoly> affine;
  bool chart_empty = false;
  for (const auto& f : nonzero) {
    MPoly a = f.specialize(kZ, one);
    if (a.is_constant()) chart_empty = true;
    affine.push_back(std::move(a));
  }
  if (!chart_empty) {
    const std::optional<MPoly> r = x_eliminant(affine);
    if (!r) {
      out.complete = false;
    } else if (!r->is_constant()) {
      const UnivariateRoots xs = roots_in_field(*r, kX);
      if (!xs.splits) out.complete = false;
      for (const auto& [x0, mult] : xs.roots) {
        std::vector<MPoly> fiber;
        for (const auto& a : affine) fiber.push_back(a.specialize(kX, x0));
        const std::optional<MPoly> g = gcd_of_nonzero(fiber);
        if (!g) throw Error(ErrorCode::InfiniteZeroSet, "a vertical line lies in the zero set");
        if (g->is_constant()) continue;
        const UnivariateRoots ys = roots_in_field(*g, kY);
        if (!ys.splits) out.complete = false;
        for (const auto& [y0, m] : ys.roots) out.points.emplace_back(x0, y0, one);
      }
    }
  }

  // Line Z = 0 away from [1:0:0]: chart Y = 1.
  std::vector<MPoly> line;
  for (const auto& f : nonzero) line.push_back(f.specialize(kZ, zero).specialize(kY, one));
  const std::optional<MPoly> g = gcd_of_nonzero(line);
  if (!g) throw Error(ErrorCode::InfiniteZeroSet, "the line Z = 0 lies in the zero set");
  if (!g->is_constant()) {
    const UnivariateRoots xs = roots_in_field(*g, kX);
    if (!xs.splits) out.complete = false;
    for (const auto& [x0, m] : xs.roots) out.points.emplace_back(x0, one, zero);
  }

  const std::array<FieldElement, 3> corner{one, zero, zero};
  if (std::all_of(nonzero.begin(), nonzero.end(), [&](const MPoly& f) { return f.evaluate(corner).is_zero(); })) {
    out.points.emplace_back(one, zero, zero);
  }

  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  return out;
}

}  // namespace evreg
