#include <gtest/gtest.h>

#include "hfitt/errors.hpp"
#include "hfitt/loci.hpp"
#include "support/generators.hpp"

using namespace hfitt;
using hfitt::testing::Gen;
using hfitt::testing::ideal_of;
using hfitt::testing::matrix_of;
using hfitt::testing::ring_of;

namespace {

AffineScheme scheme(std::vector<std::string> vars, std::vector<std::string> eqs) {
  auto r = ring_of(std::move(vars));
  std::vector<Polynomial> ps;
  for (const auto& s : eqs) ps.push_back(parse_polynomial(s, r));
  return AffineScheme(r, ps);
}

PushforwardComplex two_term(const QuotientPtr& q, std::vector<std::vector<std::string>> delta) {
  PolyMatrix d = matrix_of(q, delta);
  return PushforwardComplex(FreeComplex(q, Orientation::Cochain, 0, {d.cols(), d.rows()}, {d}));
}

PushforwardComplex single(const QuotientPtr& q, std::size_t n) {
  return PushforwardComplex(FreeComplex(q, Orientation::Cochain, 0, {n}, {}));
}

std::size_t kernel_dimension(const PolyMatrix& delta, const std::vector<Scalar>& p) {
  return delta.cols() - fiber_rank(delta, p);
}

bool vanishes_at(const Ideal& i, const std::vector<Scalar>& p) {
  const FieldSpec& k = i.ring()->field();
  return std::all_of(i.generators().begin(), i.generators().end(),
                     [&](const Polynomial& f) { return k.is_zero(f.evaluate(p)); });
}

}  // namespace

TEST(AffineScheme, RejectsEmptyScheme) {
  EXPECT_THROW(scheme({"x"}, {"x", "x - 1"}), InputError);
  EXPECT_EQ(scheme({"x", "y", "z"}, {"z^2 - x*y"}).dimension(), 2);
}

TEST(Kaehler, Presentations) {
  AffineScheme cone = scheme({"x", "y", "z"}, {"z^2 - x*y"});
  FpModule omega = kaehler_presentation(cone);
  EXPECT_EQ(omega.generator_count(), 3u);
  EXPECT_EQ(omega.presentation(), matrix_of(cone.coordinate_ring(), {{"-y"}, {"-x"}, {"2*z"}}));
  AffineScheme cusp = scheme({"x", "y"}, {"y^2 - x^3"});
  EXPECT_EQ(kaehler_presentation(cusp).presentation(), matrix_of(cusp.coordinate_ring(), {{"-3*x^2"}, {"2*y"}}));
  AffineScheme plane = scheme({"x", "y"}, {});
  FpModule free2 = kaehler_presentation(plane);
  EXPECT_EQ(free2.presentation().cols(), 0u);
  EXPECT_EQ(generic_rank(free2), 2);
}

TEST(Kaehler, PositiveCharacteristicDerivative) {
  auto r = ring_of({"x", "y"}, FieldSpec::prime(2));
  AffineScheme x(r, {parse_polynomial("x^2 + y^3", r)});
  EXPECT_EQ(kaehler_presentation(x).presentation(), matrix_of(x.coordinate_ring(), {{"0"}, {"y^2"}}));
}

TEST(SingularLocus, PaperExamples) {
  AffineScheme cone = scheme({"x", "y", "z"}, {"z^2 - x*y"});
  EXPECT_TRUE(ideal_equal(singular_locus(cone), ideal_of(cone.coordinate_ring(), {"x", "y", "z"})));
  AffineScheme cusp = scheme({"x", "y"}, {"y^2 - x^3"});
  EXPECT_TRUE(ideal_equal(singular_locus(cusp), ideal_of(cusp.coordinate_ring(), {"x^2", "y"})));
  EXPECT_FALSE(ideal_equal(singular_locus(cusp), ideal_of(cusp.coordinate_ring(), {"x", "y"})));
  AffineScheme axes = scheme({"x", "y", "z"}, {"x*y", "x*z", "y*z"});
  EXPECT_TRUE(ideal_equal(singular_locus(axes),
                          ideal_of(axes.coordinate_ring(), {"x^2", "y^2", "z^2", "x*y", "x*z", "y*z"})));
  EXPECT_TRUE(is_unit_ideal(singular_locus(scheme({"x", "y"}, {"y - x^2"}))));
}

TEST(HigherSingularLocus, Axes) {
  AffineScheme axes = scheme({"x", "y", "z"}, {"x*y", "x*z", "y*z"});
  const QuotientPtr& a = axes.coordinate_ring();
  EXPECT_TRUE(ideal_equal(higher_singular_locus(axes, 1, 3), ideal_of(a, {"x", "y", "z"})));
  EXPECT_TRUE(ideal_equal(higher_singular_locus(axes, 0, 2), singular_locus(axes)));
  EXPECT_THROW(higher_singular_locus(axes, 1, 2), InputError);
}

TEST(HigherSingularLocus, LciIsEmpty) {
  // An empty locus is cut out by the unit ideal.
  AffineScheme cone = scheme({"x", "y", "z"}, {"z^2 - x*y"});
  AffineScheme quadric = scheme({"x", "y", "z", "w"}, {"x*w - y*z"});
  for (int i = 1; i <= 2; ++i) {
    EXPECT_TRUE(is_unit_ideal(higher_singular_locus(cone, i, i + 2)));
    EXPECT_TRUE(is_unit_ideal(higher_singular_locus(quadric, i, i + 2)));
  }
}

TEST(DeterminantalScheme, Examples) {
  auto r = ring_of({"x", "y", "z", "w"});
  auto q = make_quotient(r);
  PolyMatrix m = matrix_of(q, {{"x", "y"}, {"z", "w"}});
  EXPECT_TRUE(ideal_equal(determinantal_scheme(m, 1), ideal_of(q, {"x*w - y*z"})));
  EXPECT_TRUE(ideal_equal(determinantal_scheme(m, 0), ideal_of(q, {"x", "y", "z", "w"})));
  AffineScheme cone = scheme({"x", "y", "z"}, {"z^2 - x*y"});
  PolyMatrix jac = matrix_of(make_quotient(cone.ring()), {{"-y", "-x", "2*z"}});
  EXPECT_TRUE(ideal_equal(determinantal_scheme(jac, 0), ideal_of(make_quotient(cone.ring()), {"x", "y", "z"})));
}

TEST(DeterminantalScheme, SingularContainmentForGenericTwoByTwo) {
  AffineScheme x1 = scheme({"x", "y", "z", "w"}, {"x*w - y*z"});
  Ideal sing = singular_locus(x1);
  EXPECT_TRUE(ideal_equal(sing, ideal_of(x1.coordinate_ring(), {"x", "y", "z", "w"})));
  auto q = make_quotient(x1.ring());
  Ideal x0 = determinantal_scheme(matrix_of(q, {{"x", "y"}, {"z", "w"}}), 0);
  Ideal sing_ambient(q, sing.groebner_basis());
  // X_0 inside Sing X_1: the ideal of X_0 contains that of Sing X_1.
  EXPECT_TRUE(ideal_contains(x0, sing_ambient));
}

TEST(BrillNoether, Examples) {
  auto q = make_quotient(ring_of({"t"}));
  PushforwardComplex e = two_term(q, {{"t", "0"}});
  EXPECT_TRUE(is_zero_ideal(brill_noether_ideal(e, 0)));
  EXPECT_TRUE(ideal_equal(brill_noether_ideal(e, 1), ideal_of(q, {"t"})));
  EXPECT_TRUE(is_unit_ideal(brill_noether_ideal(e, 2)));
  // One term R^n: BN^k is (0) below n and (1) from n on.
  PushforwardComplex s = single(q, 3);
  for (int k = -1; k <= 5; ++k) {
    EXPECT_EQ(is_zero_ideal(brill_noether_ideal(s, k)), k < 3) << k;
    EXPECT_EQ(is_unit_ideal(brill_noether_ideal(s, k)), k >= 3) << k;
  }
  EXPECT_THROW(PushforwardComplex(FreeComplex(q, Orientation::Chain, 0, {1}, {})), InputError);
  EXPECT_THROW(PushforwardComplex(FreeComplex(q, Orientation::Cochain, 1, {1}, {})), InputError);
}

TEST(BrillNoether, TwoTermCorollary) {
  auto q = make_quotient(ring_of({"s", "t"}));
  for (auto delta : std::vector<std::vector<std::vector<std::string>>>{
           {{"t", "0"}}, {{"s", "t"}, {"0", "s"}}, {{"s*t", "s^2", "t"}}, {{"s"}, {"t"}}, {{"0", "0"}}}) {
    PushforwardComplex e = two_term(q, delta);
    PolyMatrix d = e.complex().differential(0);
    int x = static_cast<int>(d.cols()) - static_cast<int>(d.rows());
    FpModule h1(d);
    for (int k = -2; k <= 4; ++k)
      EXPECT_TRUE(ideal_equal(brill_noether_ideal(e, k), classical_fitting(h1, k - x)));
  }
}

TEST(LiftableSections, Examples) {
  auto q = make_quotient(ring_of({"t"}));
  auto constant = liftable_sections_rank(two_term(q, {{"0"}}));
  ASSERT_TRUE(constant.has_value());
  EXPECT_EQ(constant->k, 0);
  EXPECT_EQ(constant->locally_free_rank, 1);
  EXPECT_FALSE(liftable_sections_rank(two_term(q, {{"t", "0"}})).has_value());
  auto free4 = liftable_sections_rank(single(q, 4));
  ASSERT_TRUE(free4.has_value());
  EXPECT_EQ(free4->k, 3);
  auto unit = liftable_sections_rank(two_term(q, {{"1", "t"}}));
  ASSERT_TRUE(unit.has_value());
  EXPECT_EQ(unit->k, 0);
}

// ---------------------------------------------------------------------------
// Properties

TEST(LociProperty, BrillNoetherChainAndSupport) {
  FieldSpec k = FieldSpec::rationals();
  auto q1 = make_quotient(ring_of({"t"}, k));
  auto q2 = make_quotient(ring_of({"s", "t"}, k));
  Gen g(hfitt::testing::kSuiteSeed + 61);
  for (int trial = 0; trial < 12; ++trial) {
    const QuotientPtr& q = trial % 2 ? q2 : q1;
    std::size_t r0 = static_cast<std::size_t>(g.uniform(1, 3));
    std::size_t r1 = static_cast<std::size_t>(g.uniform(1, 3));
    PolyMatrix d = g.matrix(q, r1, r0, 2, 2, 0.4);
    PushforwardComplex e(FreeComplex(q, Orientation::Cochain, 0, {r0, r1}, {d}));
    auto points = hfitt::testing::grid(k, q->ring()->variable_count(), -2, 2);
    for (int kk = -1; kk <= static_cast<int>(r0) + 1; ++kk) {
      Ideal bn = brill_noether_ideal(e, kk);
      EXPECT_TRUE(ideal_contains(brill_noether_ideal(e, kk + 1), bn));
      for (const auto& p : points)
        EXPECT_EQ(vanishes_at(bn, p), kernel_dimension(d, p) >= static_cast<std::size_t>(std::max(kk + 1, 0)))
            << trial << " " << kk;
    }
  }
}

TEST(LociProperty, CodimensionBound) {
  FieldSpec k = FieldSpec::prime(101);
  auto q = make_quotient(ring_of({"x", "y", "z"}, k));
  Gen g(hfitt::testing::kSuiteSeed + 62);
  for (int trial = 0; trial < 15; ++trial) {
    std::size_t n = static_cast<std::size_t>(g.uniform(1, 3)), m = static_cast<std::size_t>(g.uniform(1, 3));
    PolyMatrix a = g.matrix(q, n, m, 1, 2, 0.2);
    for (std::size_t kk = 0; kk < std::min(n, m); ++kk) {
      Ideal xk = determinantal_scheme(a, static_cast<int>(kk));
      if (xk.is_unit()) continue;
      int codim = 3 - xk.krull_dimension();
      EXPECT_LE(codim, static_cast<int>((n - kk) * (m - kk)));
    }
  }
}

TEST(LociProperty, SingularContainmentOnGrid) {
  // X_k(M) is inside Sing X_{k+1}(M), checked on rational points.
  FieldSpec k = FieldSpec::prime(101);
  auto r = ring_of({"x", "y"}, k);
  auto q = make_quotient(r);
  Gen g(hfitt::testing::kSuiteSeed + 63);
  auto points = hfitt::testing::grid(k, 2, -2, 2);
  int checked = 0;
  for (int trial = 0; trial < 30 && checked < 8; ++trial) {
    PolyMatrix m = g.matrix(q, 2, 3, 1, 2, 0.1);
    Ideal eqs = determinantal_scheme(m, 1);
    if (eqs.is_unit() || eqs.is_zero()) continue;
    AffineScheme x1(r, eqs.generators());
    Ideal sing = singular_locus(x1);
    Ideal x0 = determinantal_scheme(m, 0);
    for (const auto& p : points)
      if (vanishes_at(x0, p)) EXPECT_TRUE(vanishes_at(sing, p));
    ++checked;
  }
  EXPECT_GE(checked, 1);
}
