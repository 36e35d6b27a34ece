#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "comblab/rational.hpp"
#include "comblab/types.hpp"

// Exact ground truth for the comb walk by dynamic programming over the
// transition kernel. Nothing here uses generating functions.
namespace comblab::oracle {

struct CombVertex {
  std::int64_t x = 0;
  std::int64_t y = 0;

  bool on_axis() const noexcept { return y == 0; }
  friend auto operator<=>(const CombVertex&, const CombVertex&) = default;
};

/// Axis-parallel survival region. An unset bound means unbounded.
struct BarrierSpec {
  std::optional<std::int64_t> x_min, x_max, y_min, y_max;

  static BarrierSpec unbounded() { return {}; }
  /// |x| <= h, or |y| <= h: the event D_n <= h.
  static BarrierSpec deviation(Axis axis, std::int64_t h);
  /// x <= h, or y <= h: the event m_n <= h for the running maximum.
  static BarrierSpec upper(Axis axis, std::int64_t h);
  /// max(|x|, |y|) <= n.
  static BarrierSpec box(std::int64_t n);

  bool contains(const CombVertex& v) const noexcept;
};

/// Exact distribution after `step` steps. Masses are stored as integer
/// numerators over the common denominator 4^step on a rectangular window that
/// covers the support.
class StateDistribution {
 public:
  /// Point mass at the origin, step 0.
  StateDistribution();
  /// Point mass at v, step 0.
  static StateDistribution point_mass(const CombVertex& v);

  std::int64_t step() const noexcept { return step_; }
  Rational mass(const CombVertex& v) const;
  Rational total_mass() const;

  std::int64_t x_lo() const noexcept { return x_lo_; }
  std::int64_t x_hi() const noexcept { return x_hi_; }
  std::int64_t y_lo() const noexcept { return y_lo_; }
  std::int64_t y_hi() const noexcept { return y_hi_; }

  /// Numerator of the mass at v (denominator 4^step); zero outside the window.
  const BigInt& numerator(const CombVertex& v) const;

  /// One application of the kernel. Mass that lands outside the barrier is
  /// dropped, so total_mass() becomes the survival probability.
  StateDistribution advanced(const BarrierSpec& barrier = BarrierSpec::unbounded()) const;

  /// Calls f(vertex, numerator) for every vertex in the window with nonzero mass.
  template <class F>
  void for_each(F&& f) const {
    for (std::int64_t x = x_lo_; x <= x_hi_; ++x) {
      for (std::int64_t y = y_lo_; y <= y_hi_; ++y) {
        const BigInt& m = cells_[index(x, y)];
        if (sgn(m) != 0) f(CombVertex{x, y}, m);
      }
    }
  }

 private:
  std::size_t index(std::int64_t x, std::int64_t y) const noexcept {
    return static_cast<std::size_t>((x - x_lo_) * (y_hi_ - y_lo_ + 1) + (y - y_lo_));
  }
  bool in_window(std::int64_t x, std::int64_t y) const noexcept {
    return x >= x_lo_ && x <= x_hi_ && y >= y_lo_ && y <= y_hi_;
  }

  std::int64_t step_ = 0;
  std::int64_t x_lo_ = 0, x_hi_ = 0, y_lo_ = 0, y_hi_ = 0;
  std::vector<BigInt> cells_;
};

/// One kernel step without barrier.
StateDistribution step(const StateDistribution& dist);

/// Distribution of S_n.
StateDistribution position_distribution(int n);

/// P(S_i in barrier for all 0 <= i <= n). Throws UsageError if the origin is
/// outside the barrier.
Rational survival_probability(int n, const BarrierSpec& barrier);

/// survival_probability(k, barrier) for k = 0..n_max from a single sweep.
std::vector<Rational> survival_curve(int n_max, const BarrierSpec& barrier);

struct MeanDistances {
  Rational abs_x;
  Rational abs_y;
  Rational norm1;
  Rational norm_inf;
};

MeanDistances expectations(int n);
/// expectations(k) for k = 0..n_max.
std::vector<MeanDistances> expectations_sequence(int n_max);

/// E[D_n] on the given axis.
Rational deviation_expectation(int n, Axis axis);
std::vector<Rational> deviation_expectation_sequence(int n_max, Axis axis);

/// E[M_n] = 2 E[m_n] on the given axis, m_n the running maximum.
Rational span_expectation(int n, Axis axis);
std::vector<Rational> span_expectation_sequence(int n_max, Axis axis);

/// Exact E[T] for the exit time from the ball of the given radius, by
/// eliminating each tooth and solving the remaining tridiagonal system on the
/// axis over the rationals. Requires radius >= 1.
Rational exit_time_expectation(int radius, Norm norm);

struct FloatSolve {
  double value = 0.0;
  double relative_residual = 0.0;
  long iterations = 0;
};

/// E[T] from the full interior system (D - A) t = D 1 solved by conjugate
/// gradients in double precision. Requires radius >= 1.
FloatSolve exit_time_expectation_float(int radius, Norm norm, double tolerance = 1e-12);

/// Number of +-1 paths of length n from 0 to l that stay in [-k, h].
BigInt path_counts_1d(int h, int k, int l, int n);

}  // namespace comblab::oracle
