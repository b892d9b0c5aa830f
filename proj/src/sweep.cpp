#include "evreg/sweep.hpp"

#include <algorithm>

#include "evreg/error.hpp"
#include "evreg/monomial.hpp"

namespace evreg {

namespace {

constexpr std::size_t kMaxListed = 20;

void note(SweepReport& r, std::string what) {
  if (r.violations.size() < kMaxListed) r.violations.push_back(std::move(what));
}

}  // namespace

SweepReport run_matrix_sweep(int bound, int cap) {
  SweepReport r;
  r.bound = bound;
  r.cap = cap;
  const Fan p2 = Fan::p2();
  const FieldPtr q = NumberField::rationals();
  for (long a = -bound; a <= bound; ++a) {
    for (long b = -bound; b <= bound; ++b) {
      for (long c = -bound; c <= bound; ++c) {
        for (long d = -bound; d <= bound; ++d) {
          if (a * d - b * c == 0) continue;
          const IntMatrix2 m(a, b, c, d);
          ++r.matrices;
          try {
            if (const auto k = smallest_diagonal_power(m, cap)) ++r.diagonal_powers[*k];
          } catch (const Error& e) {
            if (e.code() != ErrorCode::CertificateViolation) throw;
            ++r.diagonal_violations;
            note(r, e.what());
          }
          if (abs(m.det()) <= 1) continue;
          ++r.expanding;
          const MonomialMap mm(m, FieldElement(q, 1L), FieldElement(q, 1L));
          if (const auto k = first_extendable_power(mm, p2, cap)) {
            ++r.extendable_powers[*k];
            if (!in_regular_index_set(*k)) {
              ++r.extendable_violations;
              note(r, m.to_string() + " first extends at power " + std::to_string(*k));
            }
          }
        }
      }
    }
  }
  return r;
}

}  // namespace evreg
