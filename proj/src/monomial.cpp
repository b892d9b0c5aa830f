#include "evreg/monomial.hpp"

#include <algorithm>
#include <map>

#include "evreg/error.hpp"

namespace evreg {

namespace {

std::int64_t to_exponent(const Integer& v) {
  if (!v.fits_slong_p()) throw Error(ErrorCode::ExponentOverflow, "exponent " + v.get_str() + " too large");
  return v.get_si();
}

Integer det2(const Ray& u, const Ray& v) { return u[0] * v[1] - u[1] * v[0]; }

}  // namespace

// ---------------------------------------------------------------- matrices

IntMatrix2::IntMatrix2(Integer a, Integer b, Integer c, Integer d)
    : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  if (det() == 0) throw Error(ErrorCode::NotDominant, "matrix " + to_string() + " is singular");
}

IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y) {
  return IntMatrix2(x.a() * y.a() + x.b() * y.c(), x.a() * y.b() + x.b() * y.d(), x.c() * y.a() + x.d() * y.c(),
                    x.c() * y.b() + x.d() * y.d());
}

IntMatrix2 IntMatrix2::pow(int k) const {
  if (k < 0) throw Error(ErrorCode::ZeroInput, "negative matrix power");
  IntMatrix2 result = identity();
  IntMatrix2 base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

std::array<Integer, 2> IntMatrix2::apply(const std::array<Integer, 2>& v) const {
  return {e_[0] * v[0] + e_[1] * v[1], e_[2] * v[0] + e_[3] * v[1]};
}

std::string IntMatrix2::to_string() const {
  return "[[" + e_[0].get_str() + "," + e_[1].get_str() + "],[" + e_[2].get_str() + "," + e_[3].get_str() + "]]";
}

// ---------------------------------------------------------------- maps

MonomialMap::MonomialMap(IntMatrix2 a, FieldElement lambda1, FieldElement lambda2)
    : a_(std::move(a)), lambda_{std::move(lambda1), std::move(lambda2)} {
  if (!same_field(lambda_[0].field(), lambda_[1].field())) {
    throw Error(ErrorCode::FieldMismatch, "translation entries over different fields");
  }
  if (lambda_[0].is_zero() || lambda_[1].is_zero()) {
    throw Error(ErrorCode::ZeroInput, "translation entries must be nonzero");
  }
}

MonomialMap MonomialMap::identity(const FieldPtr& field) {
  return MonomialMap(IntMatrix2::identity(), FieldElement(field, 1L), FieldElement(field, 1L));
}

MonomialMap mm_compose(const MonomialMap& m, const MonomialMap& n) {
  const IntMatrix2& a = m.matrix();
  const auto& ln = n.lambda();
  // (lambda_N)^(A_M), componentwise.
  const FieldElement v1 = ln[0].pow(a.a()) * ln[1].pow(a.b());
  const FieldElement v2 = ln[0].pow(a.c()) * ln[1].pow(a.d());
  return MonomialMap(a * n.matrix(), m.lambda()[0] * v1, m.lambda()[1] * v2);
}

MonomialMap mm_power(const MonomialMap& m, int k) {
  if (k < 1) throw Error(ErrorCode::ZeroInput, "power must be positive");
  MonomialMap out = m;
  for (int i = 1; i < k; ++i) out = mm_compose(m, out);
  return out;
}

// ---------------------------------------------------------------- powers

std::optional<int> ratio_root_of_unity_class(const IntMatrix2& a) {
  const Integer tr2 = a.trace() * a.trace();
  const Integer det = a.det();
  static constexpr int kOrder[] = {2, 3, 4, 6, 1};
  for (int c = 0; c <= 4; ++c) {
    if (tr2 != det * c) continue;
    if (c == 4 && !a.is_scalar()) return std::nullopt;  // Jordan block
    return kOrder[c];
  }
  return std::nullopt;
}

std::optional<int> smallest_diagonal_power(const IntMatrix2& a, int cap) {
  IntMatrix2 p = a;
  for (int k = 1; k <= cap; ++k) {
    if (k > 1) p = p * a;
    if (!p.is_diagonal()) continue;
    if (!a.is_diagonal() && std::find(kDiagonalIndices.begin(), kDiagonalIndices.end(), k) == kDiagonalIndices.end()) {
      throw Error(ErrorCode::CertificateViolation,
                  a.to_string() + " has first diagonal power " + std::to_string(k) + " outside {1,2,3,4,6}");
    }
    return k;
  }
  return std::nullopt;
}

std::optional<ScalarPower> smallest_scalar_positive_power(const IntMatrix2& a, int cap) {
  IntMatrix2 p = a;
  for (int k = 1; k <= cap; ++k) {
    if (k > 1) p = p * a;
    if (!p.is_scalar() || p.a() < 1) continue;
    if (!a.is_scalar() && !in_regular_index_set(k)) {
      throw Error(ErrorCode::CertificateViolation,
                  a.to_string() + " has first positive scalar power " + std::to_string(k) +
                      " outside {1,2,3,4,6,8,12}");
    }
    return ScalarPower{k, p.a()};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- fans

Fan::Fan(std::vector<Ray> rays, std::vector<std::pair<std::size_t, std::size_t>> cones)
    : rays_(std::move(rays)), cones_(std::move(cones)) {
  if (rays_.size() < 3 || cones_.size() != rays_.size()) {
    throw Error(ErrorCode::IncompleteFan, "a complete fan needs as many cones as rays, at least three");
  }
  for (const auto& r : rays_) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), r[0].get_mpz_t(), r[1].get_mpz_t());
    if (g != 1) throw Error(ErrorCode::IncompleteFan, "ray (" + r[0].get_str() + "," + r[1].get_str() + ") is not primitive");
  }
  std::map<std::size_t, std::size_t> next;
  std::vector<int> ends(rays_.size(), 0);
  for (auto& [i, j] : cones_) {
    if (i >= rays_.size() || j >= rays_.size()) throw Error(ErrorCode::IncompleteFan, "cone refers to a missing ray");
    const Integer dd = det2(rays_[i], rays_[j]);
    if (dd == 0) throw Error(ErrorCode::IncompleteFan, "cone is not two-dimensional and strictly convex");
    if (dd < 0) std::swap(i, j);
    if (!next.emplace(i, j).second) throw Error(ErrorCode::IncompleteFan, "cones overlap");
    ++ends[j];
  }
  // The counterclockwise successor map must be one cycle through all rays
  // that winds around the origin exactly once.
  if (std::any_of(ends.begin(), ends.end(), [](int e) { return e != 1; })) {
    throw Error(ErrorCode::IncompleteFan, "cones do not close up around every ray");
  }
  std::size_t cur = 0;
  for (std::size_t step = 0; step < rays_.size(); ++step) {
    cur = next.at(cur);
    if (cur == 0 && step + 1 != rays_.size()) throw Error(ErrorCode::IncompleteFan, "cones form several cycles");
  }
  // Winding number: count cones containing a direction that lies on no ray.
  Ray probe{Integer(104729), Integer(-7919)};
  while (std::any_of(rays_.begin(), rays_.end(), [&](const Ray& r) { return det2(r, probe) == 0; })) probe[1] += 1;
  int hits = 0;
  for (const auto& [i, j] : cones_) {
    if (det2(rays_[i], probe) > 0 && det2(probe, rays_[j]) > 0) ++hits;
  }
  if (hits != 1) throw Error(ErrorCode::IncompleteFan, "cones do not cover the plane exactly once");
}

Fan Fan::p2() { return Fan({{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}}); }

Fan Fan::p1xp1() { return Fan({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

Fan Fan::hirzebruch(long n) {
  return Fan({{1, 0}, {0, 1}, {-1, n}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

Fan Fan::for_surface(std::string_view name) {
  if (name == "p2") return p2();
  if (name == "p1xp1") return p1xp1();
  if (name.size() > 1 && name[0] == 'f') {
    const std::string digits(name.substr(1));
    if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() < 10) {
      return hirzebruch(std::stol(digits));
    }
  }
  throw Error(ErrorCode::SyntaxError, "unknown surface '" + std::string(name) + "' (expected p2, p1xp1 or f<n>)");
}

bool Fan::common_cone(const Ray& u, const Ray& v) const {
  auto inside = [&](const Ray& w, std::size_t i, std::size_t j) {
    return det2(rays_[i], w) >= 0 && det2(w, rays_[j]) >= 0;
  };
  for (const auto& [i, j] : cones_) {
    if (inside(u, i, j) && inside(v, i, j)) return true;
  }
  return false;
}

bool fan_compatible(const IntMatrix2& a, const Fan& fan) {
  for (const auto& [i, j] : fan.cones()) {
    if (!fan.common_cone(a.apply(fan.rays()[i]), a.apply(fan.rays()[j]))) return false;
  }
  return true;
}

std::optional<int> first_extendable_power(const MonomialMap& m, const Fan& fan, int cap) {
  IntMatrix2 p = m.matrix();
  for (int k = 1; k <= cap; ++k) {
    if (k > 1) p = p * m.matrix();
    if (fan_compatible(p, fan)) return k;
  }
  return std::nullopt;
}

ProjSelfMap to_proj_map(const MonomialMap& m) {
  const FieldPtr& field = m.field();
  auto laurent = [&](const FieldElement& lambda, const Integer& ex, const Integer& ey) {
    const std::int64_t x = to_exponent(ex);
    const std::int64_t y = to_exponent(ey);
    const MPoly num = MPoly::monomial(field, 2, {std::max<std::int64_t>(x, 0), std::max<std::int64_t>(y, 0), 0}, lambda);
    const MPoly den = MPoly::monomial(field, 2, {std::max<std::int64_t>(-x, 0), std::max<std::int64_t>(-y, 0), 0},
                                      FieldElement(field, 1L));
    return RationalFunction(num, den);
  };
  const IntMatrix2& a = m.matrix();
  return ProjSelfMap::normalize(
      homogenize_affine_pair(laurent(m.lambda()[0], a.a(), a.b()), laurent(m.lambda()[1], a.c(), a.d())));
}

}  // namespace evreg
