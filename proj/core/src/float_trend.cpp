#include "comblab/float_trend.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "comblab/errors.hpp"

namespace comblab::float_trend {
namespace {

constexpr int kMaxN = 4096;

int truncation(int n_max) {
  return std::min(n_max, static_cast<int>(std::ceil(12.0 * std::sqrt(n_max))) + 10);
}

// For each h in [0, h_max] and each n in [0, n_max], P(chain stays in its
// allowed window through step n). Returned as rows indexed by h.
using Curves = std::vector<std::vector<double>>;

// |Y| chain: 0 -> 0 or 1 with probability 1/2, y -> y +- 1 otherwise.
Curves folded_vertical_survival(int h_max, int n_max) {
  Curves out(static_cast<std::size_t>(h_max) + 1);
  for (int h = 0; h <= h_max; ++h) {
    std::vector<double> p(static_cast<std::size_t>(h) + 1, 0.0), q(p.size());
    p[0] = 1.0;
    auto& curve = out[static_cast<std::size_t>(h)];
    curve.reserve(static_cast<std::size_t>(n_max) + 1);
    curve.push_back(1.0);
    for (int s = 1; s <= n_max; ++s) {
      std::fill(q.begin(), q.end(), 0.0);
      q[0] += 0.5 * p[0];
      if (h >= 1) q[1] += 0.5 * p[0];
      const int top = std::min(h, s - 1);
      for (int y = 1; y <= top; ++y) {
        q[static_cast<std::size_t>(y - 1)] += 0.5 * p[static_cast<std::size_t>(y)];
        if (y < h) q[static_cast<std::size_t>(y + 1)] += 0.5 * p[static_cast<std::size_t>(y)];
      }
      std::swap(p, q);
      double total = 0.0;
      for (double v : p) total += v;
      curve.push_back(total);
    }
  }
  return out;
}

// Signed Y chain killed above h, truncated (mass dropped) below -depth.
Curves vertical_max_survival(int h_max, int depth, int n_max) {
  Curves out(static_cast<std::size_t>(h_max) + 1);
  for (int h = 0; h <= h_max; ++h) {
    const int width = h + depth + 1;
    std::vector<double> p(static_cast<std::size_t>(width), 0.0), q(p.size());
    auto at = [depth](int y) { return static_cast<std::size_t>(y + depth); };
    p[at(0)] = 1.0;
    auto& curve = out[static_cast<std::size_t>(h)];
    curve.reserve(static_cast<std::size_t>(n_max) + 1);
    curve.push_back(1.0);
    for (int s = 1; s <= n_max; ++s) {
      std::fill(q.begin(), q.end(), 0.0);
      const int lo = std::max(-depth, -(s - 1));
      const int hi = std::min(h, s - 1);
      for (int y = lo; y <= hi; ++y) {
        const double m = p[at(y)];
        if (m == 0.0) continue;
        if (y == 0) {
          q[at(0)] += 0.5 * m;
          if (h >= 1) q[at(1)] += 0.25 * m;
          if (-1 >= -depth) q[at(-1)] += 0.25 * m;
        } else {
          if (y - 1 >= -depth) q[at(y - 1)] += 0.5 * m;
          if (y + 1 <= h) q[at(y + 1)] += 0.5 * m;
        }
      }
      std::swap(p, q);
      double total = 0.0;
      for (double v : p) total += v;
      curve.push_back(total);
    }
  }
  return out;
}

// Simple random walk on Z killed outside [lo, hi]; survival for steps 0..steps.
std::vector<double> walk_survival(int lo, int hi, int steps) {
  const int width = hi - lo + 1;
  std::vector<double> p(static_cast<std::size_t>(width), 0.0), q(p.size());
  p[static_cast<std::size_t>(-lo)] = 1.0;
  std::vector<double> curve{1.0};
  for (int s = 1; s <= steps; ++s) {
    std::fill(q.begin(), q.end(), 0.0);
    for (int i = 0; i < width; ++i) {
      const double m = p[static_cast<std::size_t>(i)];
      if (m == 0.0) continue;
      if (i > 0) q[static_cast<std::size_t>(i - 1)] += 0.5 * m;
      if (i + 1 < width) q[static_cast<std::size_t>(i + 1)] += 0.5 * m;
    }
    std::swap(p, q);
    double total = 0.0;
    for (double v : p) total += v;
    curve.push_back(total);
  }
  return curve;
}

struct HorizontalTables {
  std::vector<double> abs, dev, span;  // indexed by the number of X steps
};

HorizontalTables horizontal_tables(int l_max) {
  HorizontalTables t;
  const auto size = static_cast<std::size_t>(l_max) + 1;
  t.abs.assign(size, 0.0);
  t.dev.assign(size, 0.0);
  t.span.assign(size, 0.0);

  // E|X_l| by a free DP on [-l_max, l_max].
  std::vector<double> p(2 * size - 1, 0.0), q(p.size());
  const int off = l_max;
  p[static_cast<std::size_t>(off)] = 1.0;
  for (int l = 1; l <= l_max; ++l) {
    std::fill(q.begin(), q.end(), 0.0);
    for (int x = -l + 1; x <= l - 1; ++x) {
      const double m = p[static_cast<std::size_t>(x + off)];
      if (m == 0.0) continue;
      q[static_cast<std::size_t>(x - 1 + off)] += 0.5 * m;
      q[static_cast<std::size_t>(x + 1 + off)] += 0.5 * m;
    }
    std::swap(p, q);
    double e = 0.0;
    for (int x = -l; x <= l; ++x) e += std::abs(x) * p[static_cast<std::size_t>(x + off)];
    t.abs[static_cast<std::size_t>(l)] = e;
  }

  // E[max |X|] = sum_h P(max |X| > h); E[max X - min X] = 2 sum_h P(max X > h).
  for (int h = 0; h < l_max; ++h) {
    const std::vector<double> two_sided = walk_survival(-h, h, l_max);
    const std::vector<double> one_sided = walk_survival(-l_max, h, l_max);
    for (int l = h + 1; l <= l_max; ++l) {
      t.dev[static_cast<std::size_t>(l)] += 1.0 - two_sided[static_cast<std::size_t>(l)];
      t.span[static_cast<std::size_t>(l)] += 2.0 * (1.0 - one_sided[static_cast<std::size_t>(l)]);
    }
  }
  return t;
}

}  // namespace

double TrendPoint::get(Quantity q) const {
  switch (q) {
    case Quantity::abs_x: return abs_x;
    case Quantity::abs_y: return abs_y;
    case Quantity::dev_x: return dev_x;
    case Quantity::dev_y: return dev_y;
    case Quantity::span_x: return span_x;
    case Quantity::span_y: return span_y;
    default: break;
  }
  throw UsageError("trend point has no quantity '" + to_string(q) + "'");
}

std::vector<TrendPoint> expectation_trend(const std::vector<int>& ns) {
  if (ns.empty()) return {};
  for (int n : ns) {
    if (n < 1 || n > kMaxN) {
      throw UsageError("expectation_trend: n must lie in [1, " + std::to_string(kMaxN) + "]");
    }
  }
  const int n_max = *std::max_element(ns.begin(), ns.end());
  const int cut = truncation(n_max);
  const int h_max = std::min(n_max - 1, static_cast<int>(std::ceil(10.0 * std::sqrt(n_max))));

  const HorizontalTables xt = horizontal_tables(cut);
  const Curves dev_y = folded_vertical_survival(h_max, n_max);
  const Curves span_y = vertical_max_survival(h_max, cut, n_max);

  std::vector<TrendPoint> out(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    TrendPoint& pt = out[i];
    pt.n = ns[i];
    for (int h = 0; h <= h_max && h < pt.n; ++h) {
      pt.dev_y += 1.0 - dev_y[static_cast<std::size_t>(h)][static_cast<std::size_t>(pt.n)];
      pt.span_y += 2.0 * (1.0 - span_y[static_cast<std::size_t>(h)][static_cast<std::size_t>(pt.n)]);
    }
  }

  // Joint law of (|Y_n|, L_n); rows |y| in [0, cut], columns l in [0, cut].
  const std::size_t stride = static_cast<std::size_t>(cut) + 1;
  std::vector<double> p(stride * stride, 0.0), q(p.size());
  p[0] = 1.0;
  for (int s = 1; s <= n_max; ++s) {
    std::fill(q.begin(), q.end(), 0.0);
    const int top = std::min(cut, s - 1);
    for (int y = 0; y <= top; ++y) {
      const std::size_t row = static_cast<std::size_t>(y) * stride;
      for (int l = 0; l <= top; ++l) {
        const double m = p[row + static_cast<std::size_t>(l)];
        if (m == 0.0) continue;
        if (y == 0) {
          if (l + 1 <= cut) q[static_cast<std::size_t>(l + 1)] += 0.5 * m;
          q[stride + static_cast<std::size_t>(l)] += 0.5 * m;
        } else {
          q[row - stride + static_cast<std::size_t>(l)] += 0.5 * m;
          if (y + 1 <= cut) q[row + stride + static_cast<std::size_t>(l)] += 0.5 * m;
        }
      }
    }
    std::swap(p, q);
    for (std::size_t i = 0; i < ns.size(); ++i) {
      if (ns[i] != s) continue;
      TrendPoint& pt = out[i];
      for (int y = 0; y <= cut; ++y) {
        for (int l = 0; l <= cut; ++l) {
          const double m = p[static_cast<std::size_t>(y) * stride + static_cast<std::size_t>(l)];
          if (m == 0.0) continue;
          const auto li = static_cast<std::size_t>(l);
          pt.abs_y += y * m;
          pt.abs_x += xt.abs[li] * m;
          pt.dev_x += xt.dev[li] * m;
          pt.span_x += xt.span[li] * m;
        }
      }
    }
  }
  return out;
}

}  // namespace comblab::float_trend
