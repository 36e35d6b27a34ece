#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "comblab/rational.hpp"

namespace comblab {

/// Truncated formal power series c_0 + c_1 z + ... + c_N z^N with exact
/// rational coefficients. N is the truncation order; binary operations
/// require equal orders and produce a series of the same order.
///
/// Values are immutable after construction and may be shared freely between
/// threads.
class PowerSeries {
 public:
  static constexpr std::size_t kDefaultOrder = 64;

  /// The zero series of the given order.
  explicit PowerSeries(std::size_t order = kDefaultOrder);

  /// Takes ownership of coeffs; the order is coeffs.size() - 1.
  explicit PowerSeries(std::vector<Rational> coeffs);

  static PowerSeries constant(const Rational& c, std::size_t order);
  /// The formal variable z.
  static PowerSeries variable(std::size_t order);
  static PowerSeries monomial(const Rational& c, std::size_t degree, std::size_t order);
  /// 1/(1-z) = 1 + z + z^2 + ...
  static PowerSeries geometric(std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  /// Unchecked access; n must be <= order().
  const Rational& operator[](std::size_t n) const noexcept { return coeffs_[n]; }

  bool is_zero() const;

  /// Drops every coefficient above new_order (new_order <= order()).
  PowerSeries truncated(std::size_t new_order) const;

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) = default;

 private:
  std::vector<Rational> coeffs_;
};

PowerSeries add(const PowerSeries& a, const PowerSeries& b);
PowerSeries sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries negate(const PowerSeries& a);
PowerSeries scale(const PowerSeries& a, const Rational& c);

/// Cauchy product truncated at the common order.
PowerSeries mul(const PowerSeries& a, const PowerSeries& b);

/// q with q * b == a. Throws SingularDivisionError if b[0] == 0.
PowerSeries div(const PowerSeries& a, const PowerSeries& b);

/// Principal square root (s[0] == 1). Requires a[0] == 1, otherwise throws
/// DomainError.
PowerSeries sqrt_series(const PowerSeries& a);

/// f(g(z)). Requires g[0] == 0. Both series must share the same order.
PowerSeries compose(const PowerSeries& f, const PowerSeries& g);

/// a / z^k; the result has order a.order() - k. The first k coefficients of
/// a must be exactly zero (NotDivisibleError otherwise).
PowerSeries shift_div_z(const PowerSeries& a, std::size_t k);

/// a * z^k, keeping the order of a.
PowerSeries shift_mul_z(const PowerSeries& a, std::size_t k);

PowerSeries pow(const PowerSeries& a, unsigned exponent);

/// Checked coefficient extraction; throws UsageError when n > a.order().
Rational coeff(const PowerSeries& a, std::size_t n);

inline PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) { return add(a, b); }
inline PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return sub(a, b); }
inline PowerSeries operator-(const PowerSeries& a) { return negate(a); }
inline PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) { return mul(a, b); }
inline PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) { return div(a, b); }
inline PowerSeries operator*(const Rational& c, const PowerSeries& a) { return scale(a, c); }
inline PowerSeries operator*(const PowerSeries& a, const Rational& c) { return scale(a, c); }

}  // namespace comblab
