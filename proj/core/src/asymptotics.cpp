#include "comblab/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "comblab/errors.hpp"

namespace comblab::asymptotics {

PowerLawFit fit_power_law(std::span<const std::pair<double, double>> points) {
  if (points.size() < 3) throw UsageError("fit_power_law: need at least three points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  PowerLawFit fit;
  fit.n_min = points.front().first;
  fit.n_max = points.front().first;
  for (const auto& [n, value] : points) {
    if (!(n > 0) || !(value > 0)) {
      throw DomainError("fit_power_law: n and value must be positive");
    }
    const double lx = std::log(n);
    const double ly = std::log(value);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    fit.n_min = std::min(fit.n_min, n);
    fit.n_max = std::max(fit.n_max, n);
  }
  const auto m = static_cast<double>(points.size());
  const double det = m * sxx - sx * sx;
  // All n equal: no slope information; report alpha = 0 and the mean level.
  fit.alpha = det == 0.0 ? 0.0 : (m * sxy - sx * sy) / det;
  const double intercept = (sy - fit.alpha * sx) / m;
  fit.C = std::exp(intercept);
  double ss = 0;
  for (const auto& [n, value] : points) {
    const double r = std::log(value) - intercept - fit.alpha * std::log(n);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / m);
  return fit;
}

std::vector<PaperConstant> paper_constants() {
  using std::numbers::pi;
  const double g = std::tgamma(1.25);
  return {
      {"E|S^x|", "1/(2^(3/4) Gamma(5/4))", 1.0 / (std::pow(2.0, 0.75) * g), 0.25, Quantity::abs_x},
      {"E|S^y|", "sqrt(2/pi)", std::sqrt(2.0 / pi), 0.5, Quantity::abs_y},
      {"E[D^x]", "2^(-7/4) pi/Gamma(5/4)", std::pow(2.0, -1.75) * pi / g, 0.25, Quantity::dev_x},
      {"E[D^y]", "sqrt(pi/2)", std::sqrt(pi / 2.0), 0.5, Quantity::dev_y},
      {"E[M^x]", "2^(1/4)/Gamma(5/4)", std::pow(2.0, 0.25) / g, 0.25, Quantity::span_x},
      {"E[M^y]", "sqrt(8/pi)", std::sqrt(8.0 / pi), 0.5, Quantity::span_y},
      {"E[T^inf]", "1", 1.0, 2.0, std::nullopt},
  };
}

const PaperConstant& constant_for(Quantity q) {
  static const std::vector<PaperConstant> table = paper_constants();
  for (const auto& c : table) {
    if (c.quantity == q) return c;
  }
  throw UsageError("no limit constant for quantity '" + to_string(q) + "'");
}

double mellin_check(double v, MellinVariant variant) {
  if (!(v > 0.0 && v < 1.0)) throw DomainError("mellin_check: v must lie in (0, 1)");
  const double shift = variant == MellinVariant::shifted ? v : 1.0;
  double sum = 0.0;
  double vh = v;
  for (;;) {
    const double term = vh / (1.0 + vh * vh * shift);
    if (term < 1e-18) break;
    sum += term;
    vh *= v;
  }
  return (1.0 - v) * sum;
}

}  // namespace comblab::asymptotics
