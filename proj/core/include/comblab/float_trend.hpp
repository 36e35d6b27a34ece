#pragma once

#include <vector>

#include "comblab/types.hpp"

// Double-precision DP for the six distance statistics at large n, used only
// for trend and exponent checks. Exact comparisons go through oracle.
//
// Uses S_n = (X_{L_n}, Y_n), where Y is the vertical walk (holding with
// probability 1/2 at 0), L_n counts its holds and X is a simple random walk
// on Z independent of (Y, L). State spaces are truncated at 12 sqrt(n_max)
// standard widths, far beyond double-precision relevance.
namespace comblab::float_trend {

struct TrendPoint {
  int n = 0;
  double abs_x = 0, abs_y = 0;
  double dev_x = 0, dev_y = 0;
  double span_x = 0, span_y = 0;

  /// One of the six distance quantities; throws UsageError otherwise.
  double get(Quantity q) const;
};

/// Expectations at each n in ns (sorted ascending or not; each n >= 1 and
/// at most 4096).
std::vector<TrendPoint> expectation_trend(const std::vector<int>& ns);

}  // namespace comblab::float_trend
