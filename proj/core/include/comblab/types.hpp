#pragma once

#include <array>
#include <string>
#include <string_view>

namespace comblab {

enum class Axis { x, y };

// Norm of the ball used for exit times: |x| + |y| or max(|x|, |y|).
enum class Norm { one, inf };

// Per-walk statistics after n steps.
//   abs_*   |S_n| per axis        dev_*   D_n, the maximal |coordinate|
//   span_*  M_n = max - min       norm1, norm_inf  of S_n
//   loops   L_n, horizontal steps taken so far
enum class Quantity { abs_x, abs_y, dev_x, dev_y, span_x, span_y, norm1, norm_inf, loops };

inline constexpr std::array<Quantity, 9> kAllQuantities = {
    Quantity::abs_x, Quantity::abs_y,  Quantity::dev_x,    Quantity::dev_y, Quantity::span_x,
    Quantity::span_y, Quantity::norm1, Quantity::norm_inf, Quantity::loops};

// The six statistics with a known asymptotic law.
inline constexpr std::array<Quantity, 6> kDistanceQuantities = {
    Quantity::abs_x, Quantity::abs_y, Quantity::dev_x, Quantity::dev_y, Quantity::span_x,
    Quantity::span_y};

inline std::string to_string(Axis a) { return a == Axis::x ? "x" : "y"; }
inline std::string to_string(Norm n) { return n == Norm::one ? "1" : "inf"; }
std::string to_string(Quantity q);

// Inverses of to_string; throw UsageError on unknown names.
Axis parse_axis(std::string_view text);
Norm parse_norm(std::string_view text);
Quantity parse_quantity(std::string_view text);

}  // namespace comblab
