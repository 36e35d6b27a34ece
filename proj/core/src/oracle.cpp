#include "comblab/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "comblab/errors.hpp"

namespace comblab::oracle {
namespace {

Rational over_power_of_four(const BigInt& numerator, std::int64_t step) {
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 4, static_cast<unsigned long>(step));
  Rational r(numerator, den);
  r.canonicalize();
  return r;
}

void require_origin_inside(const BarrierSpec& barrier) {
  if (!barrier.contains(CombVertex{0, 0})) {
    throw UsageError("barrier does not contain the origin");
  }
}

void require_steps(int n) {
  if (n < 0) throw UsageError("number of steps must be non-negative, got " + std::to_string(n));
}

const BigInt& zero_integer() {
  static const BigInt zero;
  return zero;
}

// Sums P(m > h) for h = 0..n-1 across the survival curves of barrier(h).
template <class MakeBarrier>
std::vector<Rational> tail_sum_sequence(int n_max, MakeBarrier make_barrier) {
  require_steps(n_max);
  std::vector<Rational> out(static_cast<std::size_t>(n_max) + 1);
  for (int h = 0; h < n_max; ++h) {
    const std::vector<Rational> curve = survival_curve(n_max, make_barrier(h));
    for (int n = h + 1; n <= n_max; ++n) {
      out[static_cast<std::size_t>(n)] += 1 - curve[static_cast<std::size_t>(n)];
    }
  }
  return out;
}

}  // namespace

BarrierSpec BarrierSpec::deviation(Axis axis, std::int64_t h) {
  BarrierSpec b;
  if (axis == Axis::x) {
    b.x_min = -h;
    b.x_max = h;
  } else {
    b.y_min = -h;
    b.y_max = h;
  }
  return b;
}

BarrierSpec BarrierSpec::upper(Axis axis, std::int64_t h) {
  BarrierSpec b;
  (axis == Axis::x ? b.x_max : b.y_max) = h;
  return b;
}

BarrierSpec BarrierSpec::box(std::int64_t n) {
  return BarrierSpec{-n, n, -n, n};
}

bool BarrierSpec::contains(const CombVertex& v) const noexcept {
  return (!x_min || v.x >= *x_min) && (!x_max || v.x <= *x_max) && (!y_min || v.y >= *y_min) &&
         (!y_max || v.y <= *y_max);
}

StateDistribution::StateDistribution() : cells_(1, BigInt(1)) {}

StateDistribution StateDistribution::point_mass(const CombVertex& v) {
  StateDistribution d;
  d.x_lo_ = d.x_hi_ = v.x;
  d.y_lo_ = d.y_hi_ = v.y;
  return d;
}

const BigInt& StateDistribution::numerator(const CombVertex& v) const {
  if (!in_window(v.x, v.y)) return zero_integer();
  return cells_[index(v.x, v.y)];
}

Rational StateDistribution::mass(const CombVertex& v) const {
  return over_power_of_four(numerator(v), step_);
}

Rational StateDistribution::total_mass() const {
  BigInt sum;
  for (const auto& c : cells_) sum += c;
  return over_power_of_four(sum, step_);
}

StateDistribution StateDistribution::advanced(const BarrierSpec& barrier) const {
  StateDistribution next;
  next.step_ = step_ + 1;
  next.x_lo_ = barrier.x_min ? std::max(x_lo_ - 1, *barrier.x_min) : x_lo_ - 1;
  next.x_hi_ = barrier.x_max ? std::min(x_hi_ + 1, *barrier.x_max) : x_hi_ + 1;
  next.y_lo_ = barrier.y_min ? std::max(y_lo_ - 1, *barrier.y_min) : y_lo_ - 1;
  next.y_hi_ = barrier.y_max ? std::min(y_hi_ + 1, *barrier.y_max) : y_hi_ + 1;
  next.cells_.assign(static_cast<std::size_t>((next.x_hi_ - next.x_lo_ + 1) *
                                              (next.y_hi_ - next.y_lo_ + 1)),
                     BigInt());

  // Over the common denominator 4^(t+1): an axis move (probability 1/4)
  // carries the numerator, a tooth move (probability 1/2) twice it.
  BigInt twice;
  auto deposit = [&next](std::int64_t x, std::int64_t y, const BigInt& m) {
    if (next.in_window(x, y)) next.cells_[next.index(x, y)] += m;
  };
  for_each([&](const CombVertex& v, const BigInt& m) {
    if (v.on_axis()) {
      deposit(v.x - 1, 0, m);
      deposit(v.x + 1, 0, m);
      deposit(v.x, -1, m);
      deposit(v.x, 1, m);
    } else {
      twice = m * 2;
      deposit(v.x, v.y - 1, twice);
      deposit(v.x, v.y + 1, twice);
    }
  });
  return next;
}

StateDistribution step(const StateDistribution& dist) { return dist.advanced(); }

StateDistribution position_distribution(int n) {
  require_steps(n);
  StateDistribution d;
  for (int i = 0; i < n; ++i) d = d.advanced();
  return d;
}

Rational survival_probability(int n, const BarrierSpec& barrier) {
  require_steps(n);
  return survival_curve(n, barrier).back();
}

std::vector<Rational> survival_curve(int n_max, const BarrierSpec& barrier) {
  require_steps(n_max);
  require_origin_inside(barrier);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  StateDistribution d;
  out.push_back(d.total_mass());
  for (int i = 0; i < n_max; ++i) {
    d = d.advanced(barrier);
    out.push_back(d.total_mass());
  }
  return out;
}

MeanDistances expectations(int n) { return expectations_sequence(n).back(); }

std::vector<MeanDistances> expectations_sequence(int n_max) {
  require_steps(n_max);
  std::vector<MeanDistances> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  StateDistribution d;
  for (int n = 0;; ++n) {
    BigInt sx, sy, sinf;
    d.for_each([&](const CombVertex& v, const BigInt& m) {
      const auto ax = static_cast<unsigned long>(std::llabs(v.x));
      const auto ay = static_cast<unsigned long>(std::llabs(v.y));
      sx += m * ax;
      sy += m * ay;
      sinf += m * std::max(ax, ay);
    });
    MeanDistances e{over_power_of_four(sx, n), over_power_of_four(sy, n), Rational(),
                    over_power_of_four(sinf, n)};
    e.norm1 = e.abs_x + e.abs_y;
    out.push_back(std::move(e));
    if (n == n_max) break;
    d = d.advanced();
  }
  return out;
}

Rational deviation_expectation(int n, Axis axis) {
  return deviation_expectation_sequence(n, axis).back();
}

std::vector<Rational> deviation_expectation_sequence(int n_max, Axis axis) {
  return tail_sum_sequence(n_max, [axis](int h) { return BarrierSpec::deviation(axis, h); });
}

Rational span_expectation(int n, Axis axis) { return span_expectation_sequence(n, axis).back(); }

std::vector<Rational> span_expectation_sequence(int n_max, Axis axis) {
  std::vector<Rational> out =
      tail_sum_sequence(n_max, [axis](int h) { return BarrierSpec::upper(axis, h); });
  for (auto& v : out) v *= 2;
  return out;
}

BigInt path_counts_1d(int h, int k, int l, int n) {
  if (h < 0 || k < 0) throw UsageError("path_counts_1d: h and k must be non-negative");
  if (l < -k || l > h) throw UsageError("path_counts_1d: l must lie in [-k, h]");
  require_steps(n);
  const std::size_t width = static_cast<std::size_t>(h + k + 1);
  std::vector<BigInt> cur(width), nxt(width);
  cur[static_cast<std::size_t>(k)] = 1;
  for (int s = 0; s < n; ++s) {
    for (auto& c : nxt) c = 0;
    for (std::size_t i = 0; i < width; ++i) {
      if (sgn(cur[i]) == 0) continue;
      if (i > 0) nxt[i - 1] += cur[i];
      if (i + 1 < width) nxt[i + 1] += cur[i];
    }
    std::swap(cur, nxt);
  }
  return cur[static_cast<std::size_t>(l + k)];
}

}  // namespace comblab::oracle
