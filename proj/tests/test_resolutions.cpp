#include <gtest/gtest.h>

#include "hfitt/errors.hpp"
#include "hfitt/resolution.hpp"
#include "support/generators.hpp"

using namespace hfitt;
using hfitt::testing::Gen;
using hfitt::testing::ideal_of;
using hfitt::testing::matrix_of;
using hfitt::testing::ring_of;

namespace {

QuotientPtr over(std::vector<std::string> vars, std::vector<std::string> rels = {},
                 FieldSpec k = FieldSpec::rationals()) {
  auto r = ring_of(std::move(vars), k);
  std::vector<Polynomial> ps;
  for (const auto& s : rels) ps.push_back(parse_polynomial(s, r));
  return make_quotient(r, ps);
}

QuotientPtr axes() { return over({"x", "y", "z"}, {"x*y", "x*z", "y*z"}); }

FpModule axes_omega() {
  auto a = axes();
  return FpModule(matrix_of(a, {{"y", "z", "0"}, {"x", "0", "z"}, {"0", "x", "y"}}));
}

}  // namespace

TEST(FreeResolution, KoszulOfMaximalIdeal) {
  auto q = over({"x", "y"});
  Resolution res = free_resolution(FpModule(matrix_of(q, {{"x", "y"}})), 5);
  EXPECT_EQ(res.complex.ranks(), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(res.length, 2);
  EXPECT_FALSE(res.truncated);
  PolyMatrix d2 = res.complex.differential(2);
  EXPECT_TRUE(SubmoduleBasis::column_span(d2).contains({q->parse("y"), q->parse("-x")}));
  EXPECT_TRUE(is_exact_at(res.complex, 1));
  EXPECT_TRUE(is_exact_at(res.complex, 2));
}

TEST(FreeResolution, FreeModule) {
  auto q = over({"x", "y"});
  Resolution res = free_resolution(FpModule::free(q, 1), 3);
  EXPECT_EQ(res.length, 0);
  EXPECT_EQ(res.complex.ranks(), (std::vector<std::size_t>{1}));
  EXPECT_THROW(free_resolution(FpModule::free(q, 1), 0), InputError);
}

TEST(FreeResolution, AxesOmegaOverQuotient) {
  Resolution res = free_resolution(axes_omega(), 3);
  const QuotientPtr& a = res.complex.base();
  // Over R/I the resolution does not stop: each step stays nonzero.
  EXPECT_TRUE(res.truncated);
  EXPECT_EQ(res.length, 3);
  PolyMatrix d2 = res.complex.differential(2);
  EXPECT_TRUE(SubmoduleBasis::column_span(d2).contains({a->parse("z"), a->parse("-y"), a->parse("-x")}));
  EXPECT_TRUE((res.complex.differential(1) * d2).is_zero());
  EXPECT_TRUE(is_exact_at(res.complex, 1));
  EXPECT_TRUE(is_exact_at(res.complex, 2));
  EXPECT_TRUE(ideal_equal(minors_ideal(d2, 1), ideal_of(a, {"x", "y", "z"})));
}

TEST(Minimalize, RemovesPaddingFromKoszul) {
  auto q = over({"x", "y"});
  Resolution res = free_resolution(FpModule(matrix_of(q, {{"x", "y"}})), 4);
  Resolution padded{pad_trivial(res.complex, 2, 2), res.target, res.length, false};
  padded.complex = pad_trivial(padded.complex, 1, 1);
  Resolution m = minimalize(padded);
  EXPECT_EQ(m.complex.ranks(), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(minimalize(res).complex.ranks(), res.complex.ranks());
  EXPECT_EQ(minimalize(res).complex.differentials(), res.complex.differentials());
}

TEST(Minimalize, ZeroModule) {
  auto q = over({"x"});
  Resolution res = free_resolution(FpModule(PolyMatrix::identity(q, 1)), 3);
  Resolution m = minimalize(res);
  EXPECT_EQ(m.complex.ranks(), (std::vector<std::size_t>{0}));
  EXPECT_EQ(m.length, 0);
}

TEST(Minimalize, CancellationFormula) {
  // d_1 = [1 x; y z]: cancelling the unit leaves z - x*y.
  auto q = over({"x", "y", "z"});
  Resolution res = free_resolution(FpModule(matrix_of(q, {{"1", "x"}, {"y", "z"}})), 3);
  Resolution m = minimalize(res);
  EXPECT_EQ(m.complex.ranks(), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(m.complex.differential(1)(0, 0), q->parse("z - x*y"));
}

TEST(ClassicalFitting, Examples) {
  auto q = over({"x"});
  FpModule m(matrix_of(q, {{"x"}}));
  EXPECT_TRUE(ideal_equal(classical_fitting(m, 0), ideal_of(q, {"x"})));
  EXPECT_TRUE(is_unit_ideal(classical_fitting(m, 1)));
  EXPECT_TRUE(is_zero_ideal(classical_fitting(m, -1)));
  FpModule free3 = FpModule::free(q, 3);
  EXPECT_TRUE(is_unit_ideal(classical_fitting(free3, 3)));
  EXPECT_TRUE(is_zero_ideal(classical_fitting(free3, 2)));
}

TEST(GenericRank, Examples) {
  auto c = over({"x", "y", "z"}, {"z^2 - x*y"});
  EXPECT_EQ(generic_rank(FpModule(matrix_of(c, {{"-y"}, {"-x"}, {"2*z"}}))), 2);
  auto q = over({"x"});
  EXPECT_EQ(generic_rank(FpModule::free(q, 2)), 2);
  EXPECT_EQ(generic_rank(FpModule(matrix_of(q, {{"x"}}))), 0);
}

TEST(PdLocus, Examples) {
  auto a = axes();
  EXPECT_TRUE(ideal_equal(pd_locus(axes_omega(), 2, 1), ideal_of(a, {"x", "y", "z"})));
  auto q = over({"x", "y"});
  EXPECT_TRUE(ideal_equal(pd_locus(FpModule(matrix_of(q, {{"x", "y"}})), 2, 0), ideal_of(q, {"x", "y"})));
  EXPECT_TRUE(is_unit_ideal(pd_locus(FpModule(matrix_of(q, {{"x"}})), 2, 0)));
}

TEST(PdLocus, RejectsTruncatedResolution) {
  Resolution res = free_resolution(axes_omega(), 1);
  EXPECT_TRUE(res.truncated);
  EXPECT_THROW(pd_locus(res, 2, 1), InputError);
  EXPECT_NO_THROW(pd_locus(res, 1, 1));
}

// ---------------------------------------------------------------------------
// Properties

TEST(ResolutionProperty, ExactAndConsistent) {
  auto q = over({"x", "y", "z"}, {}, FieldSpec::prime(101));
  Gen g(hfitt::testing::kSuiteSeed + 51);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t r = static_cast<std::size_t>(g.uniform(1, 2));
    std::size_t m = static_cast<std::size_t>(g.uniform(1, 3));
    FpModule mod = hfitt::testing::random_module(g, q, r, m);
    Resolution res = free_resolution(mod, 4);
    for (int i = 1; i < res.length; ++i) EXPECT_TRUE(is_exact_at(res.complex, i));
    for (int k = -2; k <= static_cast<int>(r); ++k)
      EXPECT_TRUE(ideal_equal(classical_fitting(mod, k), fitting_ideal(free_resolution(mod, 1).complex, 1, k)));
    Resolution mini = minimalize(res);
    for (int i = 1; i <= 3; ++i)
      for (int k = -3; k <= 3; ++k) {
        if (res.truncated && i > res.length) continue;
        EXPECT_TRUE(ideal_equal(fitting_ideal(res.complex, i, k), fitting_ideal(mini.complex, i, k)));
      }
  }
}

TEST(ResolutionProperty, MinimalizeIsQuasiIsomorphicToPadding) {
  auto q = over({"x", "y"}, {}, FieldSpec::prime(101));
  FpModule mod(matrix_of(q, {{"x", "y"}}));
  Resolution res = free_resolution(mod, 3);
  ChainMap inc = padding_inclusion(res.complex, 1, 2);
  Resolution padded{inc.target(), mod, 2, false};
  Resolution min = minimalize(padded);
  EXPECT_TRUE(is_quasi_iso(ChainMap(res.complex, min.complex, 0,
                                    {PolyMatrix::identity(q, 1), PolyMatrix::identity(q, 2),
                                     PolyMatrix::identity(q, 1)})));
}

TEST(ResolutionProperty, PdLocusChainOnGrid) {
  FieldSpec k = FieldSpec::prime(101);
  auto q = over({"x", "y"}, {}, k);
  Gen g(hfitt::testing::kSuiteSeed + 53);
  auto points = hfitt::testing::grid(k, 2, -2, 2);
  auto vanishes = [&](const Ideal& i, const std::vector<Scalar>& p) {
    return std::all_of(i.generators().begin(), i.generators().end(),
                       [&](const Polynomial& f) { return k.is_zero(f.evaluate(p)); });
  };
  for (int trial = 0; trial < 10; ++trial) {
    FpModule mod = hfitt::testing::random_module(g, q, 1, 2);
    int rank = generic_rank(mod);
    Resolution res = free_resolution(mod, 4);
    for (int d = 1; d <= 2; ++d) {
      Ideal lower = pd_locus(res, d, rank);
      Ideal upper = pd_locus(res, d + 1, rank);
      for (const auto& p : points)
        if (vanishes(upper, p)) EXPECT_TRUE(vanishes(lower, p));
    }
  }
}
