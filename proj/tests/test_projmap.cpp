#include <gtest/gtest.h>

#include "evreg/error.hpp"
#include "helpers.hpp"

using namespace evreg;
using namespace evreg::testing;

namespace {

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::GoldenMismatch;
}

ProjSelfMap sq_inv() { return affine_map("x^2", "y^-2"); }
ProjSelfMap shear() { return affine_map("x + y", "x^2 + y"); }
ProjSelfMap sigma() { return M("Y*Z", "X*Z", "X*Y"); }
ProjSelfMap id() { return ProjSelfMap::identity(NumberField::rationals()); }

std::vector<ProjPoint> pts(std::initializer_list<std::array<long, 3>> l) {
  std::vector<ProjPoint> out;
  for (const auto& p : l) out.push_back(pt(p[0], p[1], p[2]));
  return out;
}

}  // namespace

TEST(ProjMap, Normalize) {
  EXPECT_EQ(M("X^2*Y*Z", "X*Y^2*Z", "X*Y*Z^2"), id());
  EXPECT_EQ(M("X^4*Y^4*Z^8", "Y^8*Z^8", "Y^4*Z^12"), M("X^4", "Y^4", "Z^4"));
  const ProjSelfMap phi = shear();
  EXPECT_EQ(ProjSelfMap::normalize(phi.forms()), phi);
  EXPECT_EQ(code_of([] { (void)T("0", "0", "0"); }), ErrorCode::AllZero);
}

TEST(ProjMap, ComposeExamples) {
  EXPECT_EQ(compose(sigma(), sigma()), id());
  EXPECT_EQ(compose(sq_inv(), sq_inv()), M("X^4", "Y^4", "Z^4"));
  EXPECT_EQ(compose(shear(), shear()), M("X^2 + X*Z + 2*Y*Z", "2*X^2 + 2*X*Y + Y^2 + Y*Z", "Z^2"));
}

TEST(ProjMap, DegreeCap) {
  const ProjSelfMap phi = shear();
  EXPECT_EQ(code_of([&] { (void)compose(phi, phi, 3); }), ErrorCode::DegreeCapExceeded);
  EXPECT_EQ(code_of([&] { (void)iterate(phi, 20, 16); }), ErrorCode::DegreeCapExceeded);
  // Monomial maps are only bounded by exponent overflow.
  EXPECT_EQ(iterate(M("X^2", "Y^2", "Z^2"), 13).degree(), 8192);
}

TEST(ProjMap, Iterate) {
  EXPECT_EQ(iterate(sq_inv(), 2), M("X^4", "Y^4", "Z^4"));
  EXPECT_EQ(iterate(shear(), 1), shear());
  EXPECT_EQ(iterate(sigma(), 2), id());
}

TEST(ProjMap, Regularity) {
  EXPECT_TRUE(is_regular(M("X^4", "Y^4", "Z^4")));
  EXPECT_FALSE(is_regular(sigma()));
  EXPECT_FALSE(is_regular(shear()));
  EXPECT_FALSE(is_regular(sq_inv()));
}

TEST(ProjMap, Dominance) {
  EXPECT_TRUE(is_dominant(M("X^2", "Y^2", "Z^2")));
  EXPECT_FALSE(is_dominant(M("X^2", "X*Y", "Y^2")));
  EXPECT_TRUE(is_dominant(id()));
}

TEST(ProjMap, InvertibleEndo) {
  EXPECT_TRUE(is_invertible_endo(id()));
  EXPECT_FALSE(is_invertible_endo(M("X^4", "Y^4", "Z^4")));
  EXPECT_TRUE(is_invertible_endo(M("X + Y", "Y", "Z")));
  EXPECT_FALSE(is_invertible_endo(sigma()));
}

TEST(ProjMap, FirstRegularIterate) {
  const IterationReport r1 = first_regular_iterate(sq_inv());
  ASSERT_EQ(r1.first_regular, 2);
  EXPECT_EQ(*r1.regular_iterate, M("X^4", "Y^4", "Z^4"));
  EXPECT_FALSE(r1.invertible_flag);
  EXPECT_EQ(r1.certificate, Certificate::InIndexSet);
  EXPECT_EQ(r1.degree_sequence, (std::vector<std::int64_t>{4, 4}));

  const IterationReport r2 = first_regular_iterate(shear());
  EXPECT_EQ(r2.first_regular, 2);
  EXPECT_FALSE(r2.invertible_flag);

  const IterationReport r3 = first_regular_iterate(sigma());
  EXPECT_EQ(r3.first_regular, 2);
  EXPECT_TRUE(r3.invertible_flag);
  EXPECT_EQ(r3.certificate, Certificate::Invertible);

  EXPECT_EQ(code_of([] { (void)first_regular_iterate(M("X^2", "X*Y", "Y^2")); }), ErrorCode::NotDominant);
}

TEST(ProjMap, NotFoundWithinCap) {
  // Henon-type map: degrees double and it never becomes regular.
  const IterationReport r = first_regular_iterate(affine_map("y", "y^2 + x"), 4);
  EXPECT_FALSE(r.first_regular.has_value());
  EXPECT_EQ(r.certificate, Certificate::NotFoundWithinCap);
  EXPECT_EQ(r.degree_sequence, (std::vector<std::int64_t>{2, 4, 8, 16}));
}

TEST(ProjMap, DegreeSequence) {
  const DegreeReport a = degree_sequence(sq_inv(), 4);
  EXPECT_EQ(a.degrees, (std::vector<std::int64_t>{4, 4, 16, 16}));
  EXPECT_EQ(iterate(sq_inv(), 3), M("X^8*Y^8", "Z^16", "Y^8*Z^8"));
  EXPECT_EQ(a.final_degree, 16);
  EXPECT_EQ(a.lambda1_decimal, "2.000000");
  EXPECT_EQ(degree_sequence(id(), 3).degrees, (std::vector<std::int64_t>{1, 1, 1}));
  EXPECT_EQ(degree_sequence(M("X^2", "Y^2", "Z^2"), 3).degrees, (std::vector<std::int64_t>{2, 4, 8}));
}

TEST(ProjMap, IndeterminacyPoints) {
  const PointSet a = rational_indeterminacy_points(sq_inv());
  EXPECT_EQ(a.points, pts({{1, 0, 0}, {0, 1, 0}}));
  EXPECT_EQ(a.completeness, Completeness::Complete);
  const PointSet b = rational_indeterminacy_points(shear());
  EXPECT_EQ(b.points, pts({{0, 1, 0}}));
  EXPECT_EQ(b.completeness, Completeness::Complete);
  const PointSet c = rational_indeterminacy_points(id());
  EXPECT_TRUE(c.points.empty());
  EXPECT_EQ(c.completeness, Completeness::Empty);
  const PointSet s = rational_indeterminacy_points(sigma());
  EXPECT_EQ(s.points, pts({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(s.completeness, Completeness::Complete);
}

TEST(ProjMap, IndeterminacyIncompleteWhenEliminantDoesNotSplit) {
  // Base points at X^2 = 2 Z^2 on the line Y = 0 are irrational; [0:1:0] is
  // the only rational one.
  const ProjSelfMap phi = M("Y*X", "X^2 - 2*Z^2", "Y*Z");
  ASSERT_TRUE(has_common_projective_zero(phi.forms()));
  const PointSet r = rational_indeterminacy_points(phi);
  EXPECT_EQ(r.points, pts({{0, 1, 0}}));
  EXPECT_EQ(r.completeness, Completeness::Incomplete);
}

TEST(ProjMap, IndeterminacyConsistency) {
  const std::vector<ProjSelfMap> maps{sq_inv(), shear(), sigma(), id(), M("X^2", "Y^2", "Z^2"),
                                      M("X*Y", "Y^2", "Z^2 + X*Z"), affine_map("y", "y^2 + x"),
                                      affine_map("x*y", "y + 1"), affine_map("1/x", "y/x")};
  for (const auto& phi : maps) {
    const bool zero = has_common_projective_zero(phi.forms());
    const PointSet r = rational_indeterminacy_points(phi);
    EXPECT_EQ(r.completeness == Completeness::Empty, !zero) << phi.to_string();
    if (zero) EXPECT_TRUE(!r.points.empty() || r.completeness == Completeness::Incomplete) << phi.to_string();
    for (const auto& p : r.points) {
      for (const auto& f : phi.forms().forms()) EXPECT_TRUE(f.evaluate(p.coords()).is_zero());
    }
  }
}

TEST(ProjMap, PointFiber) {
  const PointSet a = point_fiber(M("X^4", "Y^4", "Z^4"), pt(1, 0, 0));
  EXPECT_EQ(a.points, pts({{1, 0, 0}}));
  EXPECT_EQ(a.completeness, Completeness::Complete);
  const PointSet b = point_fiber(M("X^2", "Y^2", "Z^2"), pt(1, 1, 1));
  EXPECT_EQ(b.points, pts({{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1}}));
  EXPECT_EQ(b.completeness, Completeness::Complete);
  const PointSet c = point_fiber(id(), pt(2, -3, 1));
  EXPECT_EQ(c.points, pts({{2, -3, 1}}));
  EXPECT_EQ(code_of([] { (void)point_fiber(sigma(), pt(1, 1, 1)); }), ErrorCode::NotRegular);
}

TEST(ProjMap, PointFiberIncompleteOverIrrationalRoots) {
  const PointSet r = point_fiber(M("X^2", "Y^2", "Z^2"), pt(2, 1, 1));
  EXPECT_TRUE(r.points.empty());
  EXPECT_EQ(r.completeness, Completeness::Incomplete);
}

TEST(ProjMap, TotalInvariance) {
  const std::vector<ProjPoint> w = pts({{1, 0, 0}, {0, 1, 0}});
  EXPECT_EQ(verify_totally_invariant(M("X^4", "Y^4", "Z^4"), w), Invariance::Invariant);
  const std::vector<ProjPoint> one = pts({{1, 1, 1}});
  EXPECT_EQ(verify_totally_invariant(M("X^2", "Y^2", "Z^2"), one), Invariance::NotInvariant);
  const std::vector<ProjPoint> origin = pts({{0, 0, 1}});
  EXPECT_EQ(verify_totally_invariant(M("X^2", "Y^2", "Z^2"), origin), Invariance::Invariant);
  const std::vector<ProjPoint> two = pts({{2, 1, 1}});
  EXPECT_EQ(verify_totally_invariant(M("X^2", "Y^2", "Z^2"), two), Invariance::NotInvariant);
  EXPECT_EQ(code_of([&] { (void)verify_totally_invariant(sigma(), w); }), ErrorCode::NotRegular);
}

TEST(ProjMap, SemigroupLaw) {
  const std::vector<ProjSelfMap> maps{sq_inv(), shear(), sigma(), M("X^2", "Y^2", "Z^2"), affine_map("y", "y^2 + x")};
  for (const auto& phi : maps) {
    const std::vector<ProjSelfMap> it = iterates(phi, 6);
    for (int m = 1; m < 6; ++m) {
      for (int n = 1; m + n <= 6; ++n) {
        EXPECT_EQ(it[static_cast<std::size_t>(m + n - 1)],
                  compose(it[static_cast<std::size_t>(m - 1)], it[static_cast<std::size_t>(n - 1)]))
            << phi.to_string() << " m=" << m << " n=" << n;
        EXPECT_LE(it[static_cast<std::size_t>(m + n - 1)].degree(),
                  it[static_cast<std::size_t>(m - 1)].degree() * it[static_cast<std::size_t>(n - 1)].degree());
      }
    }
  }
}

TEST(ProjMap, RegularCompositionMultipliesDegrees) {
  const ProjSelfMap a = M("X^2 + Y^2", "Y^2", "Z^2");
  const ProjSelfMap b = M("X^3", "Y^3 + Z^3", "Z^3");
  ASSERT_TRUE(is_regular(a));
  ASSERT_TRUE(is_regular(b));
  const ProjSelfMap ab = compose(a, b);
  EXPECT_TRUE(is_regular(ab));
  EXPECT_EQ(ab.degree(), 6);
}

TEST(Zeros, RootsOverExtension) {
  const FieldPtr k = parse_minpoly("t^2 - t + 1");
  // (x - 2)^2 (x - t): only 2 is rational, so the polynomial does not split.
  const MPoly p = parse_polynomial("(x - 2)^2*(x - t)", k, kX);
  const UnivariateRoots r = roots_in_field(p, 0);
  ASSERT_EQ(r.roots.size(), 1u);
  EXPECT_EQ(r.roots[0].first, FieldElement(k, 2L));
  EXPECT_EQ(r.roots[0].second, 2);
  EXPECT_FALSE(r.splits);
  const UnivariateRoots s = roots_in_field(parse_polynomial("3*(x - 1/2)*(x + 5)^3", k, kX), 0);
  EXPECT_TRUE(s.splits);
}

TEST(Zeros, RationalRoots) {
  const UnivariateRoots r = roots_in_field(parse_polynomial("(6*x - 1)*(x + 4)^2*x^3*(x^2 + 1)", NumberField::rationals(), kX), 0);
  EXPECT_EQ(r.roots.size(), 3u);
  EXPECT_FALSE(r.splits);
  int total = 0;
  for (const auto& [v, m] : r.roots) total += m;
  EXPECT_EQ(total, 6);
}
