#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "comblab/asymptotics.hpp"
#include "comblab/errors.hpp"
#include "comblab/float_trend.hpp"
#include "comblab/oracle.hpp"

using namespace comblab;
using namespace comblab::asymptotics;

namespace {

using Points = std::vector<std::pair<double, double>>;

double exponent_of(Quantity q) { return constant_for(q).exponent; }

// E[statistic] for n = 0..n_max from the exact oracle.
std::vector<Rational> exact_sequence(Quantity q, int n_max) {
  switch (q) {
    case Quantity::dev_x: return oracle::deviation_expectation_sequence(n_max, Axis::x);
    case Quantity::dev_y: return oracle::deviation_expectation_sequence(n_max, Axis::y);
    case Quantity::span_x: return oracle::span_expectation_sequence(n_max, Axis::x);
    case Quantity::span_y: return oracle::span_expectation_sequence(n_max, Axis::y);
    default: break;
  }
  std::vector<Rational> out;
  for (const auto& e : oracle::expectations_sequence(n_max)) {
    out.push_back(q == Quantity::abs_x ? e.abs_x : e.abs_y);
  }
  return out;
}

}  // namespace

TEST(Fit, SyntheticPowerLaw) {
  Points pts;
  for (double n : {4.0, 9.0, 16.0, 100.0, 1000.0}) pts.emplace_back(n, 3.0 * std::sqrt(n));
  const PowerLawFit f = fit_power_law(pts);
  EXPECT_NEAR(f.C, 3.0, 1e-12);
  EXPECT_NEAR(f.alpha, 0.5, 1e-12);
  EXPECT_NEAR(f.residual, 0.0, 1e-12);
  EXPECT_EQ(f.n_min, 4.0);
  EXPECT_EQ(f.n_max, 1000.0);
}

TEST(Fit, ConstantData) {
  const Points pts{{2, 7.5}, {20, 7.5}, {200, 7.5}};
  const PowerLawFit f = fit_power_law(pts);
  EXPECT_NEAR(f.alpha, 0.0, 1e-12);
  EXPECT_NEAR(f.C, 7.5, 1e-12);
}

TEST(Fit, Errors) {
  EXPECT_THROW(fit_power_law(Points{{1, 1}, {2, 2}}), UsageError);
  EXPECT_THROW(fit_power_law(Points{{1, 1}, {2, 0}, {3, 3}}), DomainError);
  EXPECT_THROW(fit_power_law(Points{{1, 1}, {2, -2}, {3, 3}}), DomainError);
}

TEST(Fit, VerticalDistanceOnSmallExactRange) {
  const auto seq = exact_sequence(Quantity::abs_y, 60);
  Points pts;
  for (int n = 8; n <= 60; ++n) pts.emplace_back(n, to_double(seq[n]));
  const double alpha = fit_power_law(pts).alpha;
  EXPECT_GE(alpha, 0.47);
  EXPECT_LE(alpha, 0.53);
}

TEST(Constants, ClosedFormValues) {
  // Reference digits from 50-digit evaluations of the closed forms.
  const std::pair<Quantity, double> expected[] = {
      {Quantity::abs_x, 0.65600389733375293},  {Quantity::abs_y, 0.79788456080286536},
      {Quantity::dev_x, 1.0304485122949956},   {Quantity::dev_y, 1.2533141373155003},
      {Quantity::span_x, 1.3120077946675059},  {Quantity::span_y, 1.5957691216057307}};
  for (const auto& [q, v] : expected) {
    const PaperConstant& c = constant_for(q);
    EXPECT_NEAR(c.value, v, 1e-12 * v) << c.name;
    EXPECT_EQ(c.exponent, (q == Quantity::abs_x || q == Quantity::dev_x || q == Quantity::span_x) ? 0.25 : 0.5);
  }
  const auto all = paper_constants();
  ASSERT_EQ(all.size(), 7u);
  EXPECT_EQ(all.back().value, 1.0);
  EXPECT_EQ(all.back().exponent, 2.0);
  EXPECT_FALSE(all.back().quantity.has_value());
  EXPECT_THROW(constant_for(Quantity::loops), UsageError);
}

TEST(Mellin, LimitAtVNearOne) {
  const double target = std::numbers::pi / 4;
  for (MellinVariant m : {MellinVariant::plain, MellinVariant::shifted}) {
    EXPECT_NEAR(mellin_check(0.9999, m), target, 1e-2 * target);
    const double half = mellin_check(0.5, m);
    EXPECT_GT(half, 0.0);
    EXPECT_LT(half, target);
  }
}

TEST(Mellin, ErrorDecreasesMonotonically) {
  const double target = std::numbers::pi / 4;
  for (MellinVariant m : {MellinVariant::plain, MellinVariant::shifted}) {
    double previous = INFINITY;
    for (double v : {0.9, 0.99, 0.999, 0.9999}) {
      const double err = std::abs(mellin_check(v, m) - target);
      EXPECT_LT(err, previous) << v;
      previous = err;
    }
  }
}

TEST(Mellin, RejectsOutOfRange) {
  EXPECT_THROW(mellin_check(0.0, MellinVariant::plain), DomainError);
  EXPECT_THROW(mellin_check(1.0, MellinVariant::shifted), DomainError);
}

// Finite-range exponent checks. Tolerances are per range; slow corrections
// to the n^{1/4} laws are largest at small n.
class ExactExponent : public ::testing::TestWithParam<Quantity> {};

TEST_P(ExactExponent, WithinEightHundredthsOnSixteenToSixty) {
  const Quantity q = GetParam();
  const auto seq = exact_sequence(q, 60);
  Points pts;
  for (int n = 16; n <= 60; ++n) pts.emplace_back(n, to_double(seq[n]));
  const double alpha = fit_power_law(pts).alpha;
  EXPECT_NEAR(alpha, exponent_of(q), 0.08) << to_string(q);
}

INSTANTIATE_TEST_SUITE_P(Statistics, ExactExponent, ::testing::ValuesIn(kDistanceQuantities),
                         [](const auto& info) { return to_string(info.param); });

class FloatExponent : public ::testing::TestWithParam<Quantity> {
 protected:
  static void SetUpTestSuite() {
    trend_ = float_trend::expectation_trend({256, 362, 512, 724, 1024, 1448, 2048});
  }
  static std::vector<float_trend::TrendPoint> trend_;
};
std::vector<float_trend::TrendPoint> FloatExponent::trend_;

TEST_P(FloatExponent, WithinThreeHundredthsOnTwoFiftySixToTwoThousand) {
  const Quantity q = GetParam();
  Points pts;
  for (const auto& p : trend_) pts.emplace_back(p.n, p.get(q));
  const double alpha = fit_power_law(pts).alpha;
  EXPECT_NEAR(alpha, exponent_of(q), 0.03) << to_string(q);
}

INSTANTIATE_TEST_SUITE_P(Statistics, FloatExponent, ::testing::ValuesIn(kDistanceQuantities),
                         [](const auto& info) { return to_string(info.param); });
