#include "evreg/projmap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "evreg/error.hpp"

namespace evreg {

bool in_regular_index_set(std::int64_t k) {
  return std::find(kRegularIndices.begin(), kRegularIndices.end(), k) != kRegularIndices.end();
}

ProjSelfMap ProjSelfMap::normalize(const HomogeneousTriple& raw) {
  std::array<MPoly, 3> forms = raw.forms();
  const MPoly g = mp_gcd(forms);
  if (!g.is_constant()) {
    for (auto& f : forms) f = exact_divide(f, g);
  }
  canonicalize(forms);
  return ProjSelfMap(HomogeneousTriple(forms[0], forms[1], forms[2]));
}

ProjSelfMap ProjSelfMap::identity(const FieldPtr& field) {
  return ProjSelfMap(HomogeneousTriple(MPoly::variable(field, 3, 0), MPoly::variable(field, 3, 1),
                                       MPoly::variable(field, 3, 2)));
}

ProjPoint ProjSelfMap::apply(const ProjPoint& p) const {
  std::array<FieldElement, 3> v{forms_[0].evaluate(p.coords()), forms_[1].evaluate(p.coords()),
                                forms_[2].evaluate(p.coords())};
  if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) {
    throw Error(ErrorCode::NotRegular, "map is undefined at " + p.to_string());
  }
  return ProjPoint(v[0], v[1], v[2]);
}

ProjSelfMap compose(const ProjSelfMap& outer, const ProjSelfMap& inner, std::int64_t degree_cap) {
  if (!same_field(outer.field(), inner.field())) throw Error(ErrorCode::FieldMismatch, "maps over different fields");
  const std::int64_t raw_degree = mul_exponents(outer.degree(), inner.degree());
  const bool monomial = outer.forms().is_monomial() && inner.forms().is_monomial();
  if (!monomial && raw_degree > degree_cap) {
    throw Error(ErrorCode::DegreeCapExceeded,
                "composition has degree " + std::to_string(raw_degree) + " > cap " + std::to_string(degree_cap));
  }
  const std::span<const MPoly> values(inner.forms().forms());
  HomogeneousTriple raw(outer[0].compose(values), outer[1].compose(values), outer[2].compose(values));
  return ProjSelfMap::normalize(raw);
}

std::vector<ProjSelfMap> iterates(const ProjSelfMap& phi, int n, std::int64_t degree_cap) {
  if (n < 1) throw Error(ErrorCode::ZeroInput, "iterate count must be positive");
  std::vector<ProjSelfMap> out{phi};
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 2; k <= n; ++k) out.push_back(compose(phi, out.back(), degree_cap));
  return out;
}

ProjSelfMap iterate(const ProjSelfMap& phi, int n, std::int64_t degree_cap) {
  return iterates(phi, n, degree_cap).back();
}

bool is_regular(const ProjSelfMap& phi) { return !has_common_projective_zero(phi.forms()); }

bool is_dominant(const ProjSelfMap& phi) { return !jacobian_det(phi.forms()).is_zero(); }

std::array<std::array<FieldElement, 3>, 3> linear_coefficients(const ProjSelfMap& phi) {
  if (phi.degree() != 1) throw Error(ErrorCode::DegreeMismatch, "coefficient matrix needs a degree-one map");
  const FieldPtr& k = phi.field();
  std::array<std::array<FieldElement, 3>, 3> m{{{FieldElement(k), FieldElement(k), FieldElement(k)},
                                                {FieldElement(k), FieldElement(k), FieldElement(k)},
                                                {FieldElement(k), FieldElement(k), FieldElement(k)}}};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Exponents e{0, 0, 0};
      e[j] = 1;
      m[i][j] = phi[i].coefficient(e);
    }
  }
  return m;
}

bool is_invertible_endo(const ProjSelfMap& phi) {
  if (phi.degree() != 1) return false;
  const auto m = linear_coefficients(phi);
  const FieldElement det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return !det.is_zero() && is_regular(phi);
}

std::string_view to_string(Certificate c) {
  switch (c) {
    case Certificate::InIndexSet: return "InIndexSet";
    case Certificate::Invertible: return "Invertible";
    case Certificate::NotFoundWithinCap: return "NotFoundWithinCap";
  }
  return "?";
}

IterationReport first_regular_iterate(const ProjSelfMap& phi, int cap, std::int64_t degree_cap) {
  if (cap < 1) throw Error(ErrorCode::ZeroInput, "cap must be positive");
  if (!is_dominant(phi)) throw Error(ErrorCode::NotDominant, phi.to_string() + " is not dominant");
  IterationReport report;
  report.dominant_flag = true;
  std::optional<ProjSelfMap> cur;
  for (int k = 1; k <= cap; ++k) {
    cur = k == 1 ? phi : compose(phi, *cur, degree_cap);
    report.degree_sequence.push_back(cur->degree());
    if (!is_regular(*cur)) continue;
    report.first_regular = k;
    report.invertible_flag = is_invertible_endo(*cur);
    report.regular_iterate = cur;
    if (report.invertible_flag) {
      report.certificate = Certificate::Invertible;
    } else if (in_regular_index_set(k)) {
      report.certificate = Certificate::InIndexSet;
    } else {
      throw Error(ErrorCode::CertificateViolation,
                  "first regular iterate " + std::to_string(k) + " of " + phi.to_string() +
                      " is non-invertible and outside {1,2,3,4,6,8,12}");
    }
    return report;
  }
  return report;
}

DegreeReport degree_sequence(const ProjSelfMap& phi, int n, std::int64_t degree_cap) {
  DegreeReport r;
  for (const auto& it : iterates(phi, n, degree_cap)) r.degrees.push_back(it.degree());
  r.n = n;
  r.final_degree = r.degrees.back();
  const long double est = std::pow(static_cast<long double>(r.final_degree), 1.0L / static_cast<long double>(n));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6Lf", est);
  r.lambda1_decimal = buf;
  return r;
}

std::string_view to_string(Completeness c) {
  switch (c) {
    case Completeness::Complete: return "Complete";
    case Completeness::Incomplete: return "Incomplete";
    case Completeness::Empty: return "Empty";
  }
  return "?";
}

PointSet rational_indeterminacy_points(const ProjSelfMap& phi) {
  PointSet out;
  if (!has_common_projective_zero(phi.forms())) return out;
  const ZeroSet z = rational_common_zeros(std::span<const MPoly>(phi.forms().forms()));
  out.points = z.points;
  out.completeness = z.complete ? Completeness::Complete : Completeness::Incomplete;
  return out;
}

PointSet point_fiber(const ProjSelfMap& phi, const ProjPoint& p) {
  if (!is_regular(phi)) throw Error(ErrorCode::NotRegular, "fibers are only computed for regular maps");
  std::vector<MPoly> forms;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      forms.push_back(phi[i].scaled(p[j]) - phi[j].scaled(p[i]));
    }
  }
  const ZeroSet z = rational_common_zeros(forms);
  PointSet out;
  out.points = z.points;
  out.completeness = z.complete ? Completeness::Complete : Completeness::Incomplete;
  return out;
}

std::string_view to_string(Invariance v) {
  switch (v) {
    case Invariance::Invariant: return "Invariant";
    case Invariance::NotInvariant: return "NotInvariant";
    case Invariance::Unknown: return "Unknown";
  }
  return "?";
}

Invariance verify_totally_invariant(const ProjSelfMap& phi, std::span<const ProjPoint> s) {
  if (!is_regular(phi)) throw Error(ErrorCode::NotRegular, "total invariance needs a regular map");
  auto member = [&](const ProjPoint& q) { return std::find(s.begin(), s.end(), q) != s.end(); };
  for (const auto& p : s) {
    if (!member(phi.apply(p))) return Invariance::NotInvariant;
  }
  bool unknown = false;
  for (const auto& p : s) {
    const PointSet fiber = point_fiber(phi, p);
    for (const auto& q : fiber.points) {
      if (!member(q)) return Invariance::NotInvariant;
    }
    if (fiber.completeness != Completeness::Complete) unknown = true;
  }
  return unknown ? Invariance::Unknown : Invariance::Invariant;
}

}  // namespace evreg
