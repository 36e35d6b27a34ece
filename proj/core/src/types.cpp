#include "comblab/types.hpp"

#include "comblab/errors.hpp"

namespace comblab {

std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::abs_x: return "abs_x";
    case Quantity::abs_y: return "abs_y";
    case Quantity::dev_x: return "dev_x";
    case Quantity::dev_y: return "dev_y";
    case Quantity::span_x: return "span_x";
    case Quantity::span_y: return "span_y";
    case Quantity::norm1: return "norm1";
    case Quantity::norm_inf: return "norm_inf";
    case Quantity::loops: return "loops";
  }
  return "?";
}

Axis parse_axis(std::string_view text) {
  if (text == "x") return Axis::x;
  if (text == "y") return Axis::y;
  throw UsageError("unknown axis '" + std::string(text) + "' (expected x or y)");
}

Norm parse_norm(std::string_view text) {
  if (text == "1" || text == "one") return Norm::one;
  if (text == "inf" || text == "infinity") return Norm::inf;
  throw UsageError("unknown norm '" + std::string(text) + "' (expected 1 or inf)");
}

Quantity parse_quantity(std::string_view text) {
  for (Quantity q : kAllQuantities) {
    if (to_string(q) == text) return q;
  }
  throw UsageError("unknown quantity '" + std::string(text) + "'");
}

}  // namespace comblab
