#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "comblab/errors.hpp"
#include "comblab/scaling.hpp"

using namespace comblab;
using namespace comblab::scaling;
using simulate::Estimate;

namespace {

const double kMeanAbsNormal = std::sqrt(2.0 / std::numbers::pi);

Estimate estimate_of(const std::vector<double>& xs, double (*f)(double)) {
  Estimate e;
  for (double x : xs) e.add(f(x));
  return e;
}

}  // namespace

TEST(KS, IdenticalSamplesGiveZero) {
  const auto a = reference_samples(Reference::normal, 500, 1);
  EXPECT_EQ(ks_two_sample(a, a).statistic, 0.0);
  EXPECT_EQ(ks_two_sample(a, a).n_samples, 500);
}

TEST(KS, NormalDrawsAgainstNormalCdf) {
  const auto a = reference_samples(Reference::normal, 10'000, 2);
  const KSResult r = ks_against(a, ReferenceCdf::normal);
  EXPECT_LT(r.statistic, 0.02);
  EXPECT_EQ(r.n_samples, 10'000);
  EXPECT_FALSE(r.reference.empty());
}

TEST(KS, DetectsShift) {
  auto a = reference_samples(Reference::normal, 2000, 3);
  const auto b = reference_samples(Reference::normal, 2000, 4);
  EXPECT_LT(ks_two_sample(a, b).statistic, 0.06);
  for (double& x : a) x += 0.5;
  const double d = ks_two_sample(a, b).statistic;
  EXPECT_GT(d, 0.15);
  EXPECT_LE(d, 1.0);
  EXPECT_GT(ks_against(a, ReferenceCdf::normal).statistic, 0.15);
}

TEST(KS, TiesAreHandled) {
  const std::vector<double> a(200, 1.0), b(200, 2.0);
  EXPECT_EQ(ks_two_sample(a, b).statistic, 1.0);
  std::vector<double> c(200, 1.0);
  for (std::size_t i = 0; i < 100; ++i) c[i] = 2.0;
  EXPECT_NEAR(ks_two_sample(a, c).statistic, 0.5, 1e-15);
}

TEST(KS, TooFewSamples) {
  const std::vector<double> small(99, 0.0), big(200, 0.0);
  EXPECT_THROW(ks_two_sample(small, big), UsageError);
  EXPECT_THROW(ks_against(small, ReferenceCdf::abs_normal), UsageError);
}

TEST(KS, ReferenceCdfs) {
  EXPECT_NEAR(cdf(ReferenceCdf::normal, 0.0), 0.5, 1e-15);
  EXPECT_NEAR(cdf(ReferenceCdf::normal, 1.959963984540054), 0.975, 1e-12);
  EXPECT_EQ(cdf(ReferenceCdf::abs_normal, -1.0), 0.0);
  EXPECT_NEAR(cdf(ReferenceCdf::abs_normal, 1.959963984540054), 0.95, 1e-12);
}

TEST(Reference, AbsNormalMean) {
  const Estimate e = estimate_of(reference_samples(Reference::abs_normal, 1'000'000, 5), [](double x) { return x; });
  EXPECT_LE(std::abs(e.mean() - kMeanAbsNormal), 3 * e.stderr_of_mean());
}

TEST(Reference, BrownianAtLocalTimeMoments) {
  const auto xs = reference_samples(Reference::brownian_at_local_time, 1'000'000, 6);
  const Estimate mean = estimate_of(xs, [](double x) { return x; });
  EXPECT_LE(std::abs(mean.mean()), 3 * mean.stderr_of_mean());
  // Var(sqrt(L) Z) = E[L] = E|N(0,1)|.
  const Estimate second = estimate_of(xs, [](double x) { return x * x; });
  EXPECT_LE(std::abs(second.mean() - kMeanAbsNormal), 3 * second.stderr_of_mean());
}

TEST(Reference, PathSamplerAgreesWithFastSampler) {
  const auto slow = reference_samples(Reference::brownian_at_local_time_path, 4000, 7);
  const auto fast = reference_samples(Reference::brownian_at_local_time, 4000, 8);
  EXPECT_LT(ks_two_sample(slow, fast).statistic, 0.05);
}

TEST(Reference, SamplesAreReproducible) {
  EXPECT_EQ(reference_samples(Reference::abs_normal, 100, 9), reference_samples(Reference::abs_normal, 100, 9));
  EXPECT_NE(reference_samples(Reference::abs_normal, 100, 9), reference_samples(Reference::abs_normal, 100, 10));
}

TEST(Snapshots, RescaleDividesByPowers) {
  const simulate::Snapshot s{10000, 20, -300, 150};
  const RescaledSnapshot r = rescale(s, 10000, 1.0);
  EXPECT_DOUBLE_EQ(r.x_scaled, 2.0);
  EXPECT_DOUBLE_EQ(r.y_scaled, -3.0);
  EXPECT_DOUBLE_EQ(r.loops_scaled, 1.5);
  EXPECT_EQ(r.t, 1.0);
}

TEST(Snapshots, ReproducibleAndValidated) {
  const std::vector<double> grid{0.25, 0.5, 1.0};
  const auto a = sample_snapshots(1000, 50, grid, 11);
  const auto b = sample_snapshots(1000, 50, grid, 11);
  ASSERT_EQ(a.size(), 50u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    ASSERT_EQ(a[i].size(), 3u);
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(a[i][j].x_scaled, b[i][j].x_scaled);
      EXPECT_EQ(a[i][j].y_scaled, b[i][j].y_scaled);
      EXPECT_EQ(a[i][j].loops_scaled, b[i][j].loops_scaled);
      EXPECT_EQ(a[i][j].t, grid[j]);
    }
    EXPECT_LE(a[i][0].loops_scaled, a[i][2].loops_scaled);
  }
  const std::vector<double> bad{0.0, 1.0};
  EXPECT_THROW(sample_snapshots(1000, 5, bad, 1), UsageError);
  EXPECT_THROW(sample_snapshots(0, 5, grid, 1), UsageError);
}

TEST(Snapshots, MeanVerticalDistance) {
  const std::vector<double> grid{1.0};
  const auto rows = sample_snapshots(10'000, 100'000, grid, 12);
  Estimate e;
  for (const auto& row : rows) e.add(std::abs(row[0].y_scaled));
  EXPECT_LE(std::abs(e.mean() - kMeanAbsNormal), 3 * e.stderr_of_mean()) << e.mean();
}

TEST(Snapshots, SignsAreUncorrelated) {
  const std::vector<double> grid{1.0};
  const auto rows = sample_snapshots(10'000, 20'000, grid, 13);
  std::vector<double> xs, ys;
  for (const auto& row : rows) {
    xs.push_back(row[0].x_scaled);
    ys.push_back(row[0].y_scaled);
  }
  const Estimate e = sign_product(xs, ys);
  EXPECT_LE(std::abs(e.mean()), 3 * e.stderr_of_mean());
  EXPECT_THROW(sign_product(xs, std::vector<double>(3)), UsageError);
}

TEST(Paths, HorizontalMovesOnlyOnTheAxis) {
  for (std::uint64_t walk = 0; walk < 200; ++walk) {
    Rng rng = Rng::for_stream(14, walk);
    BitStream bits(rng);
    simulate::Walker w;
    for (int i = 0; i < 2000; ++i) {
      const auto x0 = w.x(), y0 = w.y(), loops0 = w.loops();
      w.step(bits);
      const bool moved_x = w.x() != x0;
      ASSERT_TRUE(!moved_x || y0 == 0);
      ASSERT_TRUE(moved_x || w.y() != y0);
      ASSERT_EQ(w.loops() - loops0, moved_x ? 1 : 0);
      ASSERT_EQ(std::abs(w.x() - x0) + std::abs(w.y() - y0), 1);
    }
  }
}
