#include <gtest/gtest.h>

#include <cstdlib>

#include "comblab/errors.hpp"
#include "comblab/oracle.hpp"

using namespace comblab;
using namespace comblab::oracle;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return make_rational(p, d); }

}  // namespace

TEST(Step, FromOrigin) {
  const StateDistribution d = step(StateDistribution());
  EXPECT_EQ(d.step(), 1);
  for (const CombVertex v : {CombVertex{1, 0}, CombVertex{-1, 0}, CombVertex{0, 1}, CombVertex{0, -1}}) {
    EXPECT_EQ(d.mass(v), q(1, 4));
  }
  EXPECT_EQ(d.mass(CombVertex{0, 0}), 0);
  EXPECT_EQ(d.total_mass(), 1);
}

TEST(Step, FromTooth) {
  const StateDistribution d = step(StateDistribution::point_mass(CombVertex{0, 1}));
  EXPECT_EQ(d.mass(CombVertex{0, 0}), q(1, 2));
  EXPECT_EQ(d.mass(CombVertex{0, 2}), q(1, 2));
  EXPECT_EQ(d.mass(CombVertex{1, 1}), 0);
  EXPECT_EQ(d.total_mass(), 1);
}

TEST(Distribution, ConservationSymmetrySupport) {
  StateDistribution d;
  for (int n = 1; n <= 24; ++n) {
    d = d.advanced();
    ASSERT_EQ(d.total_mass(), 1) << n;
    d.for_each([&](const CombVertex& v, const BigInt& m) {
      ASSERT_LE(std::llabs(v.x) + std::llabs(v.y), n);
      ASSERT_EQ(d.numerator(CombVertex{-v.x, v.y}), m);
      ASSERT_EQ(d.numerator(CombVertex{v.x, -v.y}), m);
    });
  }
}

TEST(Survival, Examples) {
  EXPECT_EQ(survival_probability(0, BarrierSpec::deviation(Axis::x, 0)), 1);
  EXPECT_EQ(survival_probability(0, BarrierSpec::box(1)), 1);
  EXPECT_EQ(survival_probability(2, BarrierSpec::deviation(Axis::y, 0)), q(1, 4));
  EXPECT_EQ(survival_probability(5, BarrierSpec::unbounded()), 1);
}

TEST(Survival, OriginOutsideIsRejected) {
  BarrierSpec b;
  b.x_min = 1;
  EXPECT_THROW(survival_probability(3, b), UsageError);
  EXPECT_THROW(survival_probability(-1, BarrierSpec::box(2)), UsageError);
}

TEST(Survival, CurveIsNonincreasing) {
  const auto curve = survival_curve(30, BarrierSpec::box(2));
  for (std::size_t n = 1; n < curve.size(); ++n) EXPECT_LE(curve[n], curve[n - 1]);
}

TEST(Expectations, Examples) {
  const MeanDistances e0 = expectations(0);
  EXPECT_EQ(e0.abs_x, 0);
  EXPECT_EQ(e0.abs_y, 0);
  EXPECT_EQ(e0.norm1, 0);
  EXPECT_EQ(e0.norm_inf, 0);

  const MeanDistances e1 = expectations(1);
  EXPECT_EQ(e1.abs_x, q(1, 2));
  EXPECT_EQ(e1.abs_y, q(1, 2));
  EXPECT_EQ(e1.norm1, 1);
  EXPECT_EQ(e1.norm_inf, 1);

  for (const auto& e : expectations_sequence(20)) {
    EXPECT_EQ(e.norm1, e.abs_x + e.abs_y);
    EXPECT_LE(e.norm_inf, e.norm1);
  }
}

TEST(Expectations, DeviationAndSpan) {
  EXPECT_EQ(deviation_expectation(1, Axis::x), q(1, 2));
  EXPECT_EQ(deviation_expectation(1, Axis::y), q(1, 2));
  EXPECT_EQ(deviation_expectation(0, Axis::x), 0);
  EXPECT_EQ(span_expectation(0, Axis::y), 0);
  // Regression values: after one step the x-range is one with probability 1/2.
  EXPECT_EQ(span_expectation(1, Axis::x), q(1, 2));
  EXPECT_EQ(span_expectation(1, Axis::y), q(1, 2));
  EXPECT_EQ(span_expectation(2, Axis::y), 1);
}

TEST(Expectations, DeviationBetweenDistanceAndSpan) {
  const int N = 16;
  const auto dist = expectations_sequence(N);
  for (Axis a : {Axis::x, Axis::y}) {
    const auto dev = deviation_expectation_sequence(N, a);
    const auto span = span_expectation_sequence(N, a);
    for (int n = 0; n <= N; ++n) {
      EXPECT_GE(dev[n], a == Axis::x ? dist[n].abs_x : dist[n].abs_y);
      EXPECT_LE(dev[n], span[n]);
      EXPECT_LE(span[n], 2 * dev[n]);
    }
  }
}

TEST(ExitTime, RadiusOne) {
  // The infinity ball of radius 1 contains the corners (+-1, +-1), reachable
  // from (+-1, 0); the 1-norm ball does not.
  EXPECT_EQ(exit_time_expectation(1, Norm::inf), q(30, 7));
  EXPECT_EQ(exit_time_expectation(1, Norm::one), q(16, 5));
  EXPECT_THROW(exit_time_expectation(0, Norm::inf), UsageError);
}

TEST(ExitTime, InfinityBallDominates) {
  for (int r = 1; r <= 12; ++r) {
    EXPECT_GE(exit_time_expectation(r, Norm::inf), exit_time_expectation(r, Norm::one)) << r;
  }
}

TEST(ExitTime, TailSumOfBoxSurvival) {
  for (int r = 1; r <= 3; ++r) {
    const auto curve = survival_curve(600, BarrierSpec::box(r));
    double sum = 0.0;
    for (const Rational& p : curve) sum += to_double(p);
    const double exact = to_double(exit_time_expectation(r, Norm::inf));
    EXPECT_NEAR(sum, exact, 1e-10 * exact) << r;
  }
}

TEST(ExitTime, FloatSolveAgreesWithExact) {
  for (int r : {1, 2, 5, 10, 17, 25}) {
    for (Norm norm : {Norm::inf, Norm::one}) {
      const double exact = to_double(exit_time_expectation(r, norm));
      const FloatSolve f = exit_time_expectation_float(r, norm);
      EXPECT_NEAR(f.value, exact, 1e-8 * exact) << r << " " << to_string(norm);
      EXPECT_LT(f.relative_residual, 1e-10);
    }
  }
}

TEST(PathCounts, Examples) {
  EXPECT_EQ(path_counts_1d(1, 1, 0, 2), 2);
  EXPECT_EQ(path_counts_1d(3, 3, 3, 3), 1);
  EXPECT_EQ(path_counts_1d(3, 3, -2, 2), 1);
  EXPECT_EQ(path_counts_1d(2, 2, 0, 1), 0);
  // Unconfined: central binomial coefficient.
  EXPECT_EQ(path_counts_1d(10, 10, 0, 10), 252);
  EXPECT_THROW(path_counts_1d(1, 1, 2, 4), UsageError);
  EXPECT_THROW(path_counts_1d(-1, 1, 0, 4), UsageError);
}
