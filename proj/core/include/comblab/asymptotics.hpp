#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "comblab/types.hpp"

namespace comblab::asymptotics {

struct PowerLawFit {
  double C = 0.0;
  double alpha = 0.0;
  /// RMS of the residuals on the log scale.
  double residual = 0.0;
  double n_min = 0.0;
  double n_max = 0.0;
};

/// Least squares fit of log(value) = log(C) + alpha log(n). Needs at least
/// three points; throws DomainError on a non-positive n or value.
PowerLawFit fit_power_law(std::span<const std::pair<double, double>> points);

/// Limit law E[statistic] ~ value * n^exponent.
struct PaperConstant {
  std::string name;
  std::string closed_form;
  double value = 0.0;
  double exponent = 0.0;
  /// The matching simulated quantity, if any.
  std::optional<Quantity> quantity;
};

/// The six distance constants followed by the exit-time law, evaluated from
/// their closed forms.
std::vector<PaperConstant> paper_constants();

/// Constant for one of the six distance quantities.
const PaperConstant& constant_for(Quantity q);

enum class MellinVariant { plain, shifted };

/// (1 - v) sum_{h>=1} v^h / (1 + v^{2h})        (plain)
/// (1 - v) sum_{h>=1} v^h / (1 + v^{2h+1})      (shifted)
/// summed until the terms drop below 1e-18. Requires 0 < v < 1.
double mellin_check(double v, MellinVariant variant);

}  // namespace comblab::asymptotics
