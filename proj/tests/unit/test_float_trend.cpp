#include <gtest/gtest.h>

#include <cmath>

#include "comblab/errors.hpp"
#include "comblab/float_trend.hpp"
#include "comblab/oracle.hpp"

using namespace comblab;

TEST(FloatTrend, MatchesExactAtSmallN) {
  const int N = 30;
  const auto dist = oracle::expectations_sequence(N);
  const auto dev_x = oracle::deviation_expectation_sequence(N, Axis::x);
  const auto dev_y = oracle::deviation_expectation_sequence(N, Axis::y);
  const auto span_x = oracle::span_expectation_sequence(N, Axis::x);
  const auto span_y = oracle::span_expectation_sequence(N, Axis::y);

  std::vector<int> ns;
  for (int n = 1; n <= N; ++n) ns.push_back(n);
  const auto trend = float_trend::expectation_trend(ns);
  ASSERT_EQ(trend.size(), ns.size());
  for (const auto& p : trend) {
    const auto close = [&](double got, const Rational& want, const char* what) {
      const double w = to_double(want);
      EXPECT_NEAR(got, w, 1e-9 * w) << what << " n=" << p.n;
    };
    close(p.abs_x, dist[p.n].abs_x, "abs_x");
    close(p.abs_y, dist[p.n].abs_y, "abs_y");
    close(p.dev_x, dev_x[p.n], "dev_x");
    close(p.dev_y, dev_y[p.n], "dev_y");
    close(p.span_x, span_x[p.n], "span_x");
    close(p.span_y, span_y[p.n], "span_y");
  }
}

TEST(FloatTrend, OrderingAndMonotonicity) {
  const auto trend = float_trend::expectation_trend({64, 128, 256, 512});
  for (std::size_t i = 0; i < trend.size(); ++i) {
    const auto& p = trend[i];
    EXPECT_LE(p.abs_x, p.dev_x);
    EXPECT_LE(p.dev_x, p.span_x);
    EXPECT_LE(p.span_x, 2 * p.dev_x);
    EXPECT_LE(p.abs_y, p.dev_y);
    EXPECT_LE(p.dev_y, p.span_y);
    EXPECT_LE(p.span_y, 2 * p.dev_y);
    if (i > 0) {
      for (Quantity q : kDistanceQuantities) EXPECT_GT(p.get(q), trend[i - 1].get(q));
    }
  }
  EXPECT_THROW(trend[0].get(Quantity::loops), UsageError);
}

TEST(FloatTrend, RejectsBadSizes) {
  EXPECT_THROW(float_trend::expectation_trend({0}), UsageError);
  EXPECT_THROW(float_trend::expectation_trend({5000}), UsageError);
}
