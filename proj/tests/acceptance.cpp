// Acceptance run: one PASS/FAIL line per criterion, each under its time limit.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "evreg/driver.hpp"
#include "evreg/expr.hpp"
#include "evreg/monomial.hpp"
#include "evreg/skewprod.hpp"
#include "evreg/sweep.hpp"

using namespace evreg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      out_.pass = false;
      if (!out_.detail.empty()) out_.detail += "; ";
      out_.detail += what;
    }
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }
  Outcome done() {
    if (out_.pass) out_.detail = notes_;
    return out_;
  }

 private:
  Outcome out_;
  std::string notes_;
};

const FieldPtr kQ = NumberField::rationals();
constexpr std::string_view kXYZ[] = {"X", "Y", "Z"};
constexpr std::string_view kY[] = {"y"};

ProjSelfMap dsl_map(const std::string& decl, const std::string& field = "rational") {
  return to_proj_map(parse_session("field " + field + "\nmap m " + decl + "\n").maps.at(0).data);
}

ProjSelfMap proj(const std::string& a, const std::string& b, const std::string& c) {
  return ProjSelfMap::normalize(HomogeneousTriple(parse_polynomial(a, kQ, kXYZ), parse_polynomial(b, kQ, kXYZ),
                                                  parse_polynomial(c, kQ, kXYZ)));
}

ProjPoint pt(long x, long y, long z) { return ProjPoint::from_rationals(kQ, x, y, z); }

MonomialMap mono(long a, long b, long c, long d, long l1 = 1, long l2 = 1) {
  return MonomialMap(IntMatrix2(a, b, c, d), FieldElement(kQ, l1), FieldElement(kQ, l2));
}

template <typename F>
void for_each_matrix(int bound, F&& fn) {
  for (long a = -bound; a <= bound; ++a)
    for (long b = -bound; b <= bound; ++b)
      for (long c = -bound; c <= bound; ++c)
        for (long d = -bound; d <= bound; ++d)
          if (a * d - b * c != 0) fn(IntMatrix2(a, b, c, d));
}

Outcome squares_and_inverse() {
  Check ch;
  const ProjSelfMap phi = dsl_map("affine (x^2, y^-2)");
  const IterationReport r = first_regular_iterate(phi);
  ch.expect(r.first_regular == 2, "first regular iterate is not 2");
  ch.expect(r.regular_iterate == proj("X^4", "Y^4", "Z^4"), "second iterate is not [X^4 : Y^4 : Z^4]");
  const PointSet ind = rational_indeterminacy_points(phi);
  ch.expect(ind.completeness == Completeness::Complete, "indeterminacy certificate not Complete");
  ch.expect(ind.points == std::vector<ProjPoint>{pt(1, 0, 0), pt(0, 1, 0)}, "indeterminacy set differs");
  ch.note("k=2, I={[1:0:0],[0:1:0]} Complete");
  return ch.done();
}

Outcome quadratic_shear() {
  Check ch;
  const ProjSelfMap phi = dsl_map("affine (x + y, x^2 + y)");
  const ProjSelfMap phi2 = iterate(phi, 2);
  ch.expect(phi2 == proj("X^2 + X*Z + 2*Y*Z", "2*X^2 + 2*X*Y + Y^2 + Y*Z", "Z^2"), "second iterate differs");
  ch.expect(is_regular(phi2), "second iterate not regular");
  ch.expect(!is_regular(phi), "map itself regular");
  ch.note(phi2.to_string());
  return ch.done();
}

Outcome monomial_order_12() {
  Check ch;
  const IntMatrix2 a(3, 1, -3, 3);
  const auto sp = smallest_scalar_positive_power(a);
  ch.expect(sp && sp->k == 12 && sp->d == 2985984, "smallest positive scalar power is not (12, 2985984)");
  const MonomialMap m(a, FieldElement(kQ, 1L), FieldElement(kQ, 1L));
  ch.expect(first_extendable_power(m, Fan::p2()) == 12, "first extendable power over P2 is not 12");
  const auto its = iterates(to_proj_map(m), 12);
  for (int k = 1; k <= 11; ++k) ch.expect(!is_regular(its[static_cast<std::size_t>(k - 1)]), "iterate " + std::to_string(k) + " regular");
  ch.expect(is_regular(its[11]), "iterate 12 not regular");
  ch.note("A^12 = 2985984*Id, P2 power 12, projective iterates 1..11 irregular");
  return ch.done();
}

Outcome monomial_orders_3_4_6_8() {
  Check ch;
  const MonomialMap ms[] = {mono(-2, -2, 2, 0), mono(0, -2, 2, 0), mono(2, 2, -2, 0), mono(1, 1, -1, 1)};
  const int want[] = {3, 4, 6, 8};
  std::string got;
  for (int i = 0; i < 4; ++i) {
    const auto k = first_extendable_power(ms[i], Fan::p2());
    ch.expect(k == want[i], "A" + std::to_string(i + 1) + " first extendable power differs");
    got += (i ? "," : "") + (k ? std::to_string(*k) : std::string("none"));
  }
  ch.note("powers " + got);
  return ch.done();
}

Outcome cremona() {
  Check ch;
  const ProjSelfMap s = dsl_map("proj [Y*Z : X*Z : X*Y]");
  ch.expect(!is_regular(s), "sigma regular");
  ch.expect(iterate(s, 2) == ProjSelfMap::identity(kQ), "sigma^2 is not the identity");
  const IterationReport r = first_regular_iterate(s);
  ch.expect(r.invertible_flag && r.certificate == Certificate::Invertible, "report does not flag invertible");
  ch.note("sigma^2 = id, certificate Invertible");
  return ch.done();
}

Outcome triangular_family() {
  Check ch;
  const std::pair<int, std::string> fields[] = {
      {3, "t^2 - t + 1"}, {4, "t^4 + 1"}, {5, "t^4 - t^3 + t^2 - t + 1"}, {6, "t^4 - t^2 + 1"}};
  for (const auto& [n, mp] : fields) {
    const FieldPtr k = parse_minpoly(mp);
    const FieldElement zeta = FieldElement::generator(k);
    for (long cv : {1L, 2L}) {
      const FieldElement c(k, cv);
      // (c zeta x, c^2 y + x^2), fiber coordinate first.
      const TriangularMap t(c * c, c * zeta, parse_polynomial("y^2", k, kY));
      ch.expect(first_linear_iterate(t) == n, "n=" + std::to_string(n) + " c=" + std::to_string(cv));
    }
  }
  ch.note("n = 3,4,5,6 for c = 1,2");
  return ch.done();
}

Outcome diagonal_sweep() {
  Check ch;
  const SweepReport r = run_matrix_sweep(3, 24);
  ch.expect(r.diagonal_violations == 0, std::to_string(r.diagonal_violations) + " violations");
  std::set<int> seen;
  for (const auto& [k, n] : r.diagonal_powers) seen.insert(k);
  for (int k : seen) ch.expect(k == 1 || k == 2 || k == 3 || k == 4 || k == 6, "diagonal power " + std::to_string(k));
  std::string powers;
  for (const auto& [k, n] : r.diagonal_powers) powers += (powers.empty() ? "" : " ") + std::to_string(k) + ":" + std::to_string(n);
  ch.note(std::to_string(r.matrices) + " nonsingular matrices, diagonal powers {" + powers + "}, 0 violations");
  return ch.done();
}

Outcome extension_sweep() {
  Check ch;
  const SweepReport r = run_matrix_sweep(3, 24);
  ch.expect(r.extendable_violations == 0, std::to_string(r.extendable_violations) + " violations");
  std::set<int> witnessed;
  for (const auto& [k, n] : r.extendable_powers) {
    ch.expect(in_regular_index_set(k), "extendable power " + std::to_string(k));
    witnessed.insert(k);
  }
  const VerifyReport golden = verify_corpus(builtin_corpus());
  ch.expect(golden.all_ok, "golden corpus mismatch");
  witnessed.insert(golden.witnessed.begin(), golden.witnessed.end());
  for (int k : kRegularIndices) ch.expect(witnessed.contains(k), "index " + std::to_string(k) + " not witnessed");
  std::string powers;
  for (const auto& [k, n] : r.extendable_powers) powers += (powers.empty() ? "" : " ") + std::to_string(k) + ":" + std::to_string(n);
  ch.note(std::to_string(r.expanding) + " expanding matrices, powers {" + powers + "}, all of {1,2,3,4,6,8,12} witnessed");
  return ch.done();
}

Outcome property_suites() {
  Check ch;
  // Semigroup law on the golden maps.
  int semigroup = 0;
  for (const auto& gc : builtin_corpus()) {
    const auto it = iterates(to_proj_map(gc.map), 6);
    for (int m = 1; m <= 5; ++m) {
      for (int n = 1; m + n <= 6; ++n) {
        ++semigroup;
        ch.expect(it[static_cast<std::size_t>(m + n - 1)] ==
                      compose(it[static_cast<std::size_t>(m - 1)], it[static_cast<std::size_t>(n - 1)]),
                  "semigroup law " + gc.name);
      }
    }
  }
  // Functoriality on all ordered pairs of matrices with entries in [-2, 2].
  std::vector<MonomialMap> maps;
  for_each_matrix(2, [&](const IntMatrix2& a) {
    for (long l1 = 1; l1 <= 2; ++l1)
      for (long l2 = 1; l2 <= 2; ++l2) maps.emplace_back(a, FieldElement(kQ, l1), FieldElement(kQ, l2));
  });
  std::vector<ProjSelfMap> projs;
  for (const auto& m : maps) projs.push_back(to_proj_map(m));
  const std::size_t nm = maps.size() / 4;
  std::size_t functorial = 0;
  for (std::size_t i = 0; i < nm; ++i) {
    for (std::size_t j = 0; j < nm; ++j) {
      const std::size_t combo = (i * nm + j) % 16;
      const std::size_t a = 4 * i + combo / 4;
      const std::size_t b = 4 * j + combo % 4;
      if (to_proj_map(mm_compose(maps[a], maps[b])) != compose(projs[a], projs[b])) {
        ch.expect(false, "functoriality " + maps[a].matrix().to_string() + " o " + maps[b].matrix().to_string());
      }
      ++functorial;
    }
  }
  // Leading-coefficient identity on random skew products.
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> co(-3, 3);
  std::uniform_int_distribution<int> deg(1, 3);
  std::uniform_int_distribution<int> cdeg(0, 2);
  auto rand_poly = [&](int max_deg) {
    MPoly p(kQ, 1);
    for (int e = 0; e <= max_deg; ++e) p.add_term({e, 0, 0}, FieldElement(kQ, co(rng)));
    return p;
  };
  int skews = 0;
  while (skews < 200) {
    const MPoly phi = rand_poly(2);
    if (phi.is_zero()) continue;
    std::vector<RationalFunction> cs;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) cs.emplace_back(rand_poly(cdeg(rng)));
    if (cs.back().is_zero()) continue;
    const int k = 1 + skews % 3;
    ch.expect(leading_coeff_identity_check(SkewMap(phi, cs), k), "leading coefficient identity");
    ++skews;
  }
  // Fan criterion against regularity of projective iterates.
  int fan_checks = 0;
  const MonomialMap corpus[] = {mono(3, 1, -3, 3),  mono(-2, -2, 2, 0), mono(0, -2, 2, 0),
                                mono(2, 2, -2, 0), mono(1, 1, -1, 1)};
  for (const auto& m : corpus) {
    const auto its = iterates(to_proj_map(m), 12);
    for (int k = 1; k <= 12; ++k) {
      ++fan_checks;
      ch.expect(fan_compatible(m.matrix().pow(k), Fan::p2()) == is_regular(its[static_cast<std::size_t>(k - 1)]),
                "fan criterion " + m.matrix().to_string() + " k=" + std::to_string(k));
    }
  }
  // Inverses in number fields.
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 9);
  int inverses = 0;
  for (const char* mp : {"t^2 - t + 1", "t^4 + 1", "t^3 - 2"}) {
    const FieldPtr k = parse_minpoly(mp);
    for (int i = 0; i < 400; ++i) {
      std::vector<Rational> c;
      for (int j = 0; j < k->degree(); ++j) c.push_back(make_rational(num(rng), den(rng)));
      const FieldElement a(k, c);
      if (a.is_zero()) continue;
      ch.expect((a * a.inverse()).is_one(), "inverse of " + a.to_string());
      ++inverses;
    }
  }
  ch.note(std::to_string(semigroup) + " semigroup, " + std::to_string(functorial) + " functoriality, " +
          std::to_string(skews) + " skew, " + std::to_string(fan_checks) + " fan, " + std::to_string(inverses) +
          " inverse checks");
  return ch.done();
}

Outcome total_invariance() {
  Check ch;
  const ProjSelfMap phi = proj("X^4", "Y^4", "Z^4");
  const std::vector<ProjPoint> w{pt(1, 0, 0), pt(0, 1, 0)};
  ch.expect(verify_totally_invariant(phi, w) == Invariance::Invariant, "coordinate points not invariant");
  const std::vector<ProjPoint> one{pt(1, 1, 1)};
  ch.expect(verify_totally_invariant(proj("X^2", "Y^2", "Z^2"), one) == Invariance::NotInvariant,
            "negative control not rejected");
  ch.note("Invariant / NotInvariant");
  return ch.done();
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "(x^2, y^-2) golden", 1, squares_and_inverse},
      {2, "(x + y, x^2 + y) golden", 1, quadratic_shear},
      {3, "[[3,1],[-3,3]] golden", 5, monomial_order_12},
      {4, "Monomial orders 3, 4, 6, 8 golden", 5, monomial_orders_3_4_6_8},
      {5, "Cremona golden", 1, cremona},
      {6, "Triangular family", 5, triangular_family},
      {7, "Diagonal power sweep", 30, diagonal_sweep},
      {8, "Monomial regular-iterate sweep", 60, extension_sweep},
      {9, "Property suites", 30, property_suites},
      {10, "Total invariance", 1, total_invariance},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s) {
      o.pass = false;
      o.detail = "exceeded time limit; " + o.detail;
    }
    if (!o.pass) ++failures;
    std::printf("%s [%d] %s (%.3f s, limit %.0f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, c.limit_s,
                o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
