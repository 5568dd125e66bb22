#include <gtest/gtest.h>

#include "geninv/compose.hpp"
#include "geninv/fixtures.hpp"
#include "support.hpp"

namespace geninv {
namespace {

using testing::bisect_inf_minus;
using testing::bisect_inf_plus;
using testing::fin;
using testing::q;
namespace fx = fixtures;

// Predicted value at y, if y is covered by a predicted piece.
std::optional<ExtReal> predicted_at(const CompositionReport& r, const Rational& y) {
  for (const auto& p : r.predicted) {
    if (p.where.contains(y)) return p.law.at(y);
  }
  return std::nullopt;
}

bool excluded(const CompositionReport& r, const Rational& y) {
  return std::ranges::any_of(r.excluded, [&](const Interval& i) { return i.contains(y); });
}

std::vector<Rational> grid() {
  std::vector<Rational> out;
  for (int i = -32; i <= 32; ++i) out.push_back(q(i, 8));
  return out;
}

TEST(ComposeExact, IdentityChain) {
  const auto id = fx::identity();
  EXPECT_TRUE(canonical_equal(compose_exact(id, invert_plus(id)), to_ext(id)));
}

TEST(ComposeExact, MatchesEvaluationChain) {
  // Ground truth: evaluate the inner inverse by bisection, then T (limits at +-inf).
  for (const auto& [name, f] : fx::named_set()) {
    const auto tp = compose_exact(f, invert_plus(f));
    const auto tm = compose_exact(f, invert_minus(f));
    const auto pt = compose_exact(invert_plus(f), f);
    const auto mt = compose_exact(invert_minus(f), f);
    for (const auto& y : grid()) {
      EXPECT_EQ(tp.eval(y), f.eval_ext(bisect_inf_plus(f, y))) << name << " y=" << to_string(y);
      EXPECT_EQ(tm.eval(y), f.eval_ext(bisect_inf_minus(f, y))) << name << " y=" << to_string(y);
      EXPECT_EQ(pt.eval(y), bisect_inf_plus(f, f.eval(y))) << name << " x=" << to_string(y);
      EXPECT_EQ(mt.eval(y), bisect_inf_minus(f, f.eval(y))) << name << " x=" << to_string(y);
    }
  }
}

TEST(ComposeExact, SpecPoints) {
  const auto f4 = fx::f4();
  EXPECT_EQ(f4.eval_ext(bisect_inf_plus(f4, q(1, 2))), fin(1));
  EXPECT_EQ(compose_exact(f4, invert_plus(f4)).eval(q(1, 2)), fin(1));
  const auto f3 = fx::f3();
  EXPECT_EQ(f3.eval_ext(bisect_inf_minus(f3, 0)), fin(0));
  EXPECT_EQ(compose_exact(f3, invert_minus(f3)).eval(0), fin(0));
}

TEST(Predictions, F4TAfterPlus) {
  const auto report = predict_T_after_inv(fx::f4(), Side::Plus);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(predicted_at(report, q(1, 2)), fin(1));
  EXPECT_EQ(predicted_at(report, 3), fin(3));
  EXPECT_EQ(predicted_at(report, -3), fin(-3));
  EXPECT_TRUE(excluded(report, 0));
  EXPECT_TRUE(excluded(report, 1));
}

TEST(Predictions, IdentityIsIdentity) {
  for (Side side : {Side::Plus, Side::Minus}) {
    const auto a = predict_T_after_inv(fx::identity(), side);
    const auto b = predict_inv_after_T(fx::identity(), side);
    EXPECT_TRUE(a.ok());
    EXPECT_TRUE(b.ok());
    EXPECT_TRUE(a.excluded.empty());
    EXPECT_TRUE(b.excluded.empty());
    for (const auto& y : grid()) {
      EXPECT_EQ(predicted_at(a, y), ExtReal(y));
      EXPECT_EQ(predicted_at(b, y), ExtReal(y));
    }
  }
}

TEST(Predictions, F2BelowRangeIsExcluded) {
  const auto report = predict_T_after_inv(fx::f2(), Side::Plus);
  EXPECT_TRUE(report.ok());
  EXPECT_TRUE(excluded(report, q(-1, 2)));
  EXPECT_FALSE(predicted_at(report, q(-1, 2)).has_value());
  const ExtReal actual = report.actual.eval(q(-1, 2));
  EXPECT_EQ(actual, fx::f2().eval_ext(bisect_inf_plus(fx::f2(), q(-1, 2))));
  EXPECT_EQ(actual, fin(0));
  EXPECT_NE(actual, fin(-1, 2));
}

TEST(Predictions, F3InverseAfterT) {
  const auto plus = predict_inv_after_T(fx::f3(), Side::Plus);
  const auto minus = predict_inv_after_T(fx::f3(), Side::Minus);
  EXPECT_TRUE(plus.ok());
  EXPECT_TRUE(minus.ok());
  EXPECT_EQ(predicted_at(plus, q(1, 2)), fin(1));
  EXPECT_EQ(predicted_at(minus, q(1, 2)), fin(0));
  EXPECT_EQ(predicted_at(plus, 2), fin(2));
  EXPECT_EQ(predicted_at(minus, -2), fin(-2));
  EXPECT_TRUE(excluded(plus, 0));
  EXPECT_TRUE(excluded(plus, 1));
}

TEST(Predictions, F5ZeroMismatchesWithEdges) {
  for (Side side : {Side::Plus, Side::Minus}) {
    for (const auto& r : {predict_T_after_inv(fx::f5(), side), predict_inv_after_T(fx::f5(), side)}) {
      EXPECT_TRUE(r.ok()) << r.composition;
      EXPECT_FALSE(r.excluded.empty()) << r.composition;
      EXPECT_FALSE(r.edges.empty()) << r.composition;
      for (const auto& e : r.edges) EXPECT_EQ(e.actual, r.actual.eval(e.point));
    }
  }
}

TEST(Predictions, DetectsWrongPrediction) {
  const auto f = fx::f4();
  auto report = make_report("wrong", {{Interval::whole_line(), ExtSegment::identity()}},
                            compose_exact(f, invert_plus(f)));
  EXPECT_FALSE(report.ok());
}

TEST(OneSided, RightVersionOfF5) {
  const auto f = right_version(fx::f5());
  const auto [outer, inner] = predict_one_sided(f, Continuity::Right);
  EXPECT_TRUE(outer.ok());
  EXPECT_TRUE(inner.ok());
  EXPECT_EQ(predicted_at(outer, 0), fin(1));
  EXPECT_EQ(predicted_at(outer, q(1, 2)), fin(1));
  EXPECT_EQ(predicted_at(outer, 1), fin(1));
  EXPECT_EQ(predicted_at(outer, 2), fin(2));
}

TEST(OneSided, StepAndIdentity) {
  const auto [a, b] = predict_one_sided(fx::f2(), Continuity::Right);
  EXPECT_TRUE(a.ok());
  EXPECT_TRUE(b.ok());
  const auto [c, d] = predict_one_sided(fx::identity(), Continuity::Left);
  EXPECT_TRUE(c.ok());
  EXPECT_TRUE(d.ok());
}

TEST(OneSided, RequiresOneSidedContinuity) {
  try {
    (void)predict_one_sided(fx::f5(), Continuity::Right);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotOneSidedContinuous);
    EXPECT_NE(std::string(e.what()).find("x=1"), std::string::npos);
  }
  EXPECT_THROW((void)predict_one_sided(fx::f2(), Continuity::Left), Error);
}

TEST(Fig1, Regression) {
  const auto f5 = fx::f5();
  // T+(T(1)) = 1 while T+(T(1)-) = T-(T(1)) = 0.
  EXPECT_EQ(bisect_inf_plus(f5, f5.eval(1)), fin(1));
  EXPECT_EQ(bisect_inf_minus(f5, f5.eval(1)), fin(0));
  EXPECT_TRUE(regression_fig1(f5));
  EXPECT_EQ(fig1_witness(f5), std::optional<Rational>(1));
  EXPECT_FALSE(regression_fig1(fx::identity()));
  EXPECT_FALSE(regression_fig1(fx::f4()));
}

}  // namespace
}  // namespace geninv
