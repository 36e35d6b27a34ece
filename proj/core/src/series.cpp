#include "comblab/series.hpp"

#include <string>
#include <utility>

#include "comblab/errors.hpp"

namespace comblab {
namespace {

void require_same_order(const PowerSeries& a, const PowerSeries& b, const char* op) {
  if (a.order() != b.order()) {
    throw UsageError(std::string(op) + ": order mismatch (" + std::to_string(a.order()) +
                     " vs " + std::to_string(b.order()) + ")");
  }
}

}  // namespace

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1) {}

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw UsageError("PowerSeries: coefficient vector must not be empty");
  }
}

PowerSeries PowerSeries::constant(const Rational& c, std::size_t order) {
  std::vector<Rational> v(order + 1);
  v[0] = c;
  return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::variable(std::size_t order) {
  return monomial(Rational(1), 1, order);
}

PowerSeries PowerSeries::monomial(const Rational& c, std::size_t degree, std::size_t order) {
  std::vector<Rational> v(order + 1);
  if (degree <= order) {
    v[degree] = c;
  }
  return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::geometric(std::size_t order) {
  return PowerSeries(std::vector<Rational>(order + 1, Rational(1)));
}

bool PowerSeries::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

PowerSeries PowerSeries::truncated(std::size_t new_order) const {
  if (new_order > order()) {
    throw UsageError("truncated: cannot raise order " + std::to_string(order()) + " to " +
                     std::to_string(new_order));
  }
  return PowerSeries(std::vector<Rational>(coeffs_.begin(),
                                           coeffs_.begin() + static_cast<std::ptrdiff_t>(new_order + 1)));
}

PowerSeries add(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b, "add");
  std::vector<Rational> r(a.order() + 1);
  for (std::size_t i = 0; i <= a.order(); ++i) r[i] = a[i] + b[i];
  return PowerSeries(std::move(r));
}

PowerSeries sub(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b, "sub");
  std::vector<Rational> r(a.order() + 1);
  for (std::size_t i = 0; i <= a.order(); ++i) r[i] = a[i] - b[i];
  return PowerSeries(std::move(r));
}

PowerSeries negate(const PowerSeries& a) {
  std::vector<Rational> r(a.order() + 1);
  for (std::size_t i = 0; i <= a.order(); ++i) r[i] = -a[i];
  return PowerSeries(std::move(r));
}

PowerSeries scale(const PowerSeries& a, const Rational& c) {
  std::vector<Rational> r(a.order() + 1);
  if (sgn(c) != 0) {
    for (std::size_t i = 0; i <= a.order(); ++i) r[i] = a[i] * c;
  }
  return PowerSeries(std::move(r));
}

PowerSeries mul(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b, "mul");
  const std::size_t n = a.order();
  std::vector<Rational> r(n + 1);
  Rational term;
  // Most series in this library are even or odd, so skipping zero factors
  // halves the work.
  for (std::size_t i = 0; i <= n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (sgn(b[j]) == 0) continue;
      mpq_mul(term.get_mpq_t(), a[i].get_mpq_t(), b[j].get_mpq_t());
      r[i + j] += term;
    }
  }
  return PowerSeries(std::move(r));
}

PowerSeries div(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b, "div");
  if (sgn(b[0]) == 0) {
    throw SingularDivisionError("div: divisor has zero constant term");
  }
  const std::size_t n = a.order();
  const Rational inv_b0 = 1 / b[0];
  std::vector<Rational> q(n + 1);
  Rational acc;
  Rational term;
  for (std::size_t k = 0; k <= n; ++k) {
    acc = a[k];
    for (std::size_t j = 1; j <= k; ++j) {
      if (sgn(b[j]) == 0 || sgn(q[k - j]) == 0) continue;
      mpq_mul(term.get_mpq_t(), q[k - j].get_mpq_t(), b[j].get_mpq_t());
      acc -= term;
    }
    q[k] = acc * inv_b0;
  }
  return PowerSeries(std::move(q));
}

PowerSeries sqrt_series(const PowerSeries& a) {
  if (a[0] != 1) {
    throw DomainError("sqrt_series: constant term must be 1, got " + to_fraction_string(a[0]));
  }
  // s*s == a coefficientwise: 2 s_k = a_k - sum_{j=1}^{k-1} s_j s_{k-j}.
  const std::size_t n = a.order();
  std::vector<Rational> s(n + 1);
  s[0] = 1;
  Rational acc;
  Rational term;
  for (std::size_t k = 1; k <= n; ++k) {
    acc = a[k];
    for (std::size_t j = 1; j < k; ++j) {
      if (sgn(s[j]) == 0 || sgn(s[k - j]) == 0) continue;
      mpq_mul(term.get_mpq_t(), s[j].get_mpq_t(), s[k - j].get_mpq_t());
      acc -= term;
    }
    s[k] = acc / 2;
  }
  return PowerSeries(std::move(s));
}

PowerSeries compose(const PowerSeries& f, const PowerSeries& g) {
  require_same_order(f, g, "compose");
  if (sgn(g[0]) != 0) {
    throw DomainError("compose: inner series must have zero constant term");
  }
  // Horner: f_0 + g (f_1 + g (f_2 + ...)).
  const std::size_t n = f.order();
  PowerSeries acc = PowerSeries::constant(f[n], n);
  for (std::size_t i = n; i-- > 0;) {
    acc = mul(acc, g);
    std::vector<Rational> c(acc.coeffs().begin(), acc.coeffs().end());
    c[0] += f[i];
    acc = PowerSeries(std::move(c));
  }
  return acc;
}

PowerSeries shift_div_z(const PowerSeries& a, std::size_t k) {
  if (k > a.order()) {
    throw UsageError("shift_div_z: shift " + std::to_string(k) + " exceeds order " +
                     std::to_string(a.order()));
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (sgn(a[i]) != 0) {
      throw NotDivisibleError("shift_div_z: coefficient " + std::to_string(i) + " is " +
                              to_fraction_string(a[i]) + ", not divisible by z^" +
                              std::to_string(k));
    }
  }
  return PowerSeries(std::vector<Rational>(a.coeffs().begin() + static_cast<std::ptrdiff_t>(k),
                                           a.coeffs().end()));
}

PowerSeries shift_mul_z(const PowerSeries& a, std::size_t k) {
  const std::size_t n = a.order();
  std::vector<Rational> r(n + 1);
  for (std::size_t i = 0; i + k <= n; ++i) r[i + k] = a[i];
  return PowerSeries(std::move(r));
}

PowerSeries pow(const PowerSeries& a, unsigned exponent) {
  PowerSeries result = PowerSeries::constant(Rational(1), a.order());
  PowerSeries base = a;
  while (exponent > 0) {
    if (exponent & 1u) result = mul(result, base);
    exponent >>= 1u;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

Rational coeff(const PowerSeries& a, std::size_t n) {
  if (n > a.order()) {
    throw UsageError("coeff: index " + std::to_string(n) + " exceeds order " +
                     std::to_string(a.order()));
  }
  return a[n];
}

}  // namespace comblab
