#include <gtest/gtest.h>

#include <optional>
#include <random>

#include "comblab/errors.hpp"
#include "comblab/series.hpp"

using namespace comblab;

namespace {

PowerSeries poly(std::vector<Rational> c, std::size_t order) {
  c.resize(order + 1);
  return PowerSeries(std::move(c));
}

Rational q(std::int64_t p, std::int64_t d = 1) { return make_rational(p, d); }

// Random series with small numerators and denominators; first coefficient
// forced to `lead` when given.
PowerSeries random_series(std::mt19937_64& gen, std::size_t order, std::optional<Rational> lead = {}) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  std::vector<Rational> c(order + 1);
  for (auto& x : c) x = make_rational(num(gen), den(gen));
  if (lead) c[0] = *lead;
  return PowerSeries(std::move(c));
}

}  // namespace

TEST(Series, AddExamples) {
  const std::size_t N = 8;
  EXPECT_EQ(poly({1, 1}, N) + poly({1, -1}, N), PowerSeries::constant(2, N));
  const PowerSeries f = poly({q(3), q(-1, 2), q(5, 7)}, N);
  EXPECT_EQ(PowerSeries(N) + f, f);
  const PowerSeries half_z = poly({0, q(1, 2)}, N);
  EXPECT_EQ(half_z + half_z, PowerSeries::variable(N));
}

TEST(Series, MulExamples) {
  const std::size_t N = 8;
  EXPECT_EQ(poly({1, 1}, N) * poly({1, -1}, N), poly({1, 0, -1}, N));
  const PowerSeries f = poly({q(2), q(1, 3), q(0), q(-4, 5)}, N);
  EXPECT_EQ(f * PowerSeries::constant(1, N), f);
  EXPECT_EQ(PowerSeries::geometric(N) * poly({1, -1}, N), PowerSeries::constant(1, N));
}

TEST(Series, DivExamples) {
  const std::size_t N = 10;
  EXPECT_EQ(PowerSeries::constant(1, N) / poly({1, -1}, N), PowerSeries::geometric(N));
  const PowerSeries f = poly({q(3), q(1, 3), q(-2)}, N);
  EXPECT_EQ(f / f, PowerSeries::constant(1, N));
  EXPECT_EQ(poly({1, 0, -1}, N) / poly({1, -1}, N), poly({1, 1}, N));
}

TEST(Series, SqrtExamples) {
  const std::size_t N = 10;
  const PowerSeries s = sqrt_series(poly({1, 0, -1}, N));
  EXPECT_EQ(s[0], 1);
  EXPECT_EQ(s[2], q(-1, 2));
  EXPECT_EQ(s[4], q(-1, 8));
  EXPECT_EQ(s[6], q(-1, 16));
  EXPECT_EQ(s * s, poly({1, 0, -1}, N));
  EXPECT_EQ(sqrt_series(PowerSeries::constant(1, N)), PowerSeries::constant(1, N));
  EXPECT_EQ(sqrt_series(poly({1, 2, 1}, N)), poly({1, 1}, N));
}

TEST(Series, ComposeExamples) {
  const std::size_t N = 12;
  const PowerSeries z = PowerSeries::variable(N);
  const PowerSeries even = compose(PowerSeries::geometric(N), z * z);
  for (std::size_t n = 0; n <= N; ++n) EXPECT_EQ(even[n], n % 2 == 0 ? 1 : 0) << n;
  const PowerSeries f = poly({q(1), q(2, 3), q(-1), q(0), q(5)}, N);
  EXPECT_EQ(compose(f, z), f);
}

TEST(Series, ShiftDivExamples) {
  const std::size_t N = 9;
  const PowerSeries z = PowerSeries::variable(N);
  EXPECT_EQ(shift_div_z(z * z, 2), PowerSeries::constant(1, N - 2));
  EXPECT_EQ(shift_div_z(z, 1), PowerSeries::constant(1, N - 1));

  const PowerSeries f2 = shift_div_z(PowerSeries::constant(1, N) - sqrt_series(poly({1, 0, -1}, N)), 1);
  EXPECT_EQ(f2.order(), N - 1);
  EXPECT_EQ(f2[0], 0);
  EXPECT_EQ(f2[1], q(1, 2));
  EXPECT_EQ(f2[3], q(1, 8));
  EXPECT_EQ(f2[5], q(1, 16));
  EXPECT_EQ(f2[7], q(5, 128));
}

TEST(Series, CoeffExamples) {
  EXPECT_EQ(coeff(PowerSeries::geometric(8), 5), 1);
  EXPECT_EQ(coeff(PowerSeries::monomial(1, 3, 8), 3), 1);
  EXPECT_EQ(coeff(PowerSeries::monomial(1, 3, 8), 2), 0);
}

TEST(Series, Errors) {
  const PowerSeries a(4), b(5);
  EXPECT_THROW(add(a, b), UsageError);
  EXPECT_THROW(mul(a, b), UsageError);
  EXPECT_THROW(div(PowerSeries::constant(1, 4), PowerSeries::variable(4)), SingularDivisionError);
  EXPECT_THROW(sqrt_series(PowerSeries::constant(4, 4)), DomainError);
  EXPECT_THROW(compose(PowerSeries::geometric(4), PowerSeries::constant(1, 4)), DomainError);
  EXPECT_THROW(shift_div_z(poly({0, 1}, 4), 2), NotDivisibleError);
  EXPECT_THROW(coeff(a, 5), UsageError);
}

TEST(Series, RingAxiomsOnRandomSeries) {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 5; ++trial) {
    const PowerSeries a = random_series(gen, 64), b = random_series(gen, 64), c = random_series(gen, 64);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Series, DivisionRoundTrip) {
  std::mt19937_64 gen(12);
  for (int trial = 0; trial < 10; ++trial) {
    const PowerSeries a = random_series(gen, 32);
    const PowerSeries b = random_series(gen, 32, make_rational(trial + 1, 3));
    EXPECT_EQ(div(a, b) * b, a);
  }
}

TEST(Series, SqrtRoundTrip) {
  std::mt19937_64 gen(13);
  for (int trial = 0; trial < 100; ++trial) {
    const PowerSeries a = random_series(gen, 16, Rational(1));
    const PowerSeries s = sqrt_series(a);
    EXPECT_EQ(s[0], 1);
    EXPECT_EQ(s * s, a);
  }
}

TEST(Series, ComposeAssociative) {
  std::mt19937_64 gen(14);
  for (int trial = 0; trial < 3; ++trial) {
    const PowerSeries f = random_series(gen, 10);
    const PowerSeries g = random_series(gen, 10, Rational(0));
    const PowerSeries h = random_series(gen, 10, Rational(0));
    EXPECT_EQ(compose(compose(f, g), h), compose(f, compose(g, h)));
  }
}

TEST(Series, CanonicalCoefficients) {
  const PowerSeries s = PowerSeries::constant(1, 20) / poly({3, -2, 1}, 20);
  for (const Rational& c : s.coeffs()) {
    EXPECT_GT(sgn(c.get_den()), 0);
    EXPECT_EQ(gcd(c.get_num(), c.get_den()), 1);
  }
}

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("-6/8"), q(-3, 4));
  EXPECT_EQ(to_fraction_string(q(6, 8)), "3/4");
  EXPECT_EQ(to_fraction_string(q(4, 2)), "2");
  EXPECT_THROW(parse_rational("1/0"), UsageError);
  EXPECT_THROW(parse_rational("x"), UsageError);
  EXPECT_EQ(pow2_inverse(3), q(1, 8));
}
