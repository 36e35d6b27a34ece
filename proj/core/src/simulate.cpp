#include "comblab/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "comblab/errors.hpp"
#include "comblab/parallel.hpp"

namespace comblab::simulate {
namespace {

constexpr std::int64_t kChunk = 1024;

// Stream indices for exit-time samples live in a separate range from walks.
constexpr std::uint64_t kExitStreamOffset = 1ULL << 62;

std::vector<Estimate> merge_in_order(const std::vector<std::vector<Estimate>>& parts, std::size_t width) {
  std::vector<Estimate> out(width);
  for (const auto& part : parts) {
    for (std::size_t j = 0; j < width; ++j) out[j].merge(part[j]);
  }
  return out;
}

}  // namespace

void WalkConfig::validate() const {
  if (n_steps < 1) throw UsageError("n_steps must be >= 1");
  if (n_walks < 1) throw UsageError("n_walks must be >= 1");
  for (double t : record_grid) {
    if (!(t > 0.0 && t <= 1.0)) throw UsageError("record_grid times must lie in (0, 1]");
  }
}

double PathSummary::value(Quantity q) const {
  switch (q) {
    case Quantity::abs_x: return static_cast<double>(std::llabs(final_x));
    case Quantity::abs_y: return static_cast<double>(std::llabs(final_y));
    case Quantity::dev_x: return static_cast<double>(dev_x);
    case Quantity::dev_y: return static_cast<double>(dev_y);
    case Quantity::span_x: return static_cast<double>(span_x);
    case Quantity::span_y: return static_cast<double>(span_y);
    case Quantity::norm1: return static_cast<double>(std::llabs(final_x) + std::llabs(final_y));
    case Quantity::norm_inf: return static_cast<double>(std::max(std::llabs(final_x), std::llabs(final_y)));
    case Quantity::loops: return static_cast<double>(loops);
  }
  return 0.0;
}

void Estimate::add(double x) noexcept {
  ++count_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(count_);
  m2_ += delta * (x - mean_);
}

void Estimate::merge(const Estimate& other) noexcept {
  if (other.count_ == 0) return;
  if (count_ == 0) {
    *this = other;
    return;
  }
  const auto na = static_cast<double>(count_);
  const auto nb = static_cast<double>(other.count_);
  const double n = na + nb;
  const double delta = other.mean_ - mean_;
  mean_ += delta * nb / n;
  m2_ += other.m2_ + delta * delta * na * nb / n;
  count_ += other.count_;
}

double Estimate::variance() const noexcept {
  return count_ < 2 ? 0.0 : m2_ / static_cast<double>(count_ - 1);
}

double Estimate::stderr_of_mean() const noexcept {
  return count_ < 2 ? 0.0 : std::sqrt(variance() / static_cast<double>(count_));
}

void Walker::step(BitStream& bits) noexcept {
  ++steps_;
  if (y_ == 0) {
    switch (bits.take(2)) {
      case 0: --x_; min_x_ = std::min(min_x_, x_); break;
      case 1: ++x_; max_x_ = std::max(max_x_, x_); break;
      case 2: --y_; min_y_ = std::min<std::int64_t>(min_y_, -1); break;
      default: ++y_; max_y_ = std::max<std::int64_t>(max_y_, 1); break;
    }
    if (y_ == 0) ++loops_;
  } else if (bits.take(1) != 0) {
    ++y_;
    max_y_ = std::max(max_y_, y_);
  } else {
    --y_;
    min_y_ = std::min(min_y_, y_);
  }
  const std::int64_t ax = std::llabs(x_);
  const std::int64_t ay = std::llabs(y_);
  max_norm1_ = std::max(max_norm1_, ax + ay);
  max_norm_inf_ = std::max(max_norm_inf_, std::max(ax, ay));
}

PathSummary Walker::summary() const {
  PathSummary s;
  s.final_x = x_;
  s.final_y = y_;
  s.dev_x = std::max(max_x_, -min_x_);
  s.dev_y = std::max(max_y_, -min_y_);
  s.span_x = max_x_ - min_x_;
  s.span_y = max_y_ - min_y_;
  s.loops = loops_;
  s.max_norm1 = max_norm1_;
  s.max_norm_inf = max_norm_inf_;
  return s;
}

PathSummary run_walk(std::int64_t n_steps, Rng& rng, std::span<const std::int64_t> record_steps) {
  Walker w;
  BitStream bits(rng);
  std::vector<Snapshot> snaps;
  snaps.reserve(record_steps.size());
  std::size_t next = 0;
  auto record = [&] {
    while (next < record_steps.size() && record_steps[next] == w.steps()) {
      snaps.push_back(Snapshot{w.steps(), w.x(), w.y(), w.loops()});
      ++next;
    }
  };
  record();
  for (std::int64_t i = 0; i < n_steps; ++i) {
    w.step(bits);
    record();
  }
  PathSummary s = w.summary();
  s.snapshots = std::move(snaps);
  return s;
}

std::vector<std::int64_t> grid_steps(std::int64_t n_steps, std::span<const double> grid) {
  std::vector<std::int64_t> steps;
  steps.reserve(grid.size());
  for (double t : grid) {
    steps.push_back(static_cast<std::int64_t>(std::floor(static_cast<double>(n_steps) * t)));
  }
  if (!std::is_sorted(steps.begin(), steps.end())) {
    throw UsageError("record_grid must be ascending");
  }
  return steps;
}

Estimate estimate_quantity(const WalkConfig& config, Quantity quantity) {
  const Quantity q[] = {quantity};
  return estimate_quantities(config, q).front();
}

std::vector<Estimate> estimate_quantities(const WalkConfig& config, std::span<const Quantity> quantities) {
  config.validate();
  const std::vector<Quantity> qs(quantities.begin(), quantities.end());
  auto parts = run_chunks<std::vector<Estimate>>(
      config.n_walks, kChunk, [&](std::int64_t begin, std::int64_t end) {
        std::vector<Estimate> est(qs.size());
        for (std::int64_t i = begin; i < end; ++i) {
          Rng rng = Rng::for_stream(config.seed, static_cast<std::uint64_t>(i));
          const PathSummary s = run_walk(config.n_steps, rng);
          for (std::size_t j = 0; j < qs.size(); ++j) est[j].add(s.value(qs[j]));
        }
        return est;
      });
  return merge_in_order(parts, qs.size());
}

std::vector<std::vector<Estimate>> estimate_prefixes(const WalkConfig& config,
                                                     std::span<const std::int64_t> checkpoints,
                                                     std::span<const Quantity> quantities) {
  config.validate();
  if (!std::is_sorted(checkpoints.begin(), checkpoints.end())) {
    throw UsageError("checkpoints must be ascending");
  }
  if (!checkpoints.empty() && checkpoints.back() > config.n_steps) {
    throw UsageError("checkpoints must not exceed n_steps");
  }
  const std::vector<std::int64_t> cps(checkpoints.begin(), checkpoints.end());
  const std::vector<Quantity> qs(quantities.begin(), quantities.end());
  const std::size_t width = cps.size() * qs.size();
  auto parts = run_chunks<std::vector<Estimate>>(
      config.n_walks, kChunk, [&](std::int64_t begin, std::int64_t end) {
        std::vector<Estimate> est(width);
        for (std::int64_t i = begin; i < end; ++i) {
          Rng rng = Rng::for_stream(config.seed, static_cast<std::uint64_t>(i));
          BitStream bits(rng);
          Walker w;
          for (std::size_t c = 0; c < cps.size(); ++c) {
            while (w.steps() < cps[c]) w.step(bits);
            const PathSummary s = w.summary();
            for (std::size_t j = 0; j < qs.size(); ++j) est[c * qs.size() + j].add(s.value(qs[j]));
          }
        }
        return est;
      });
  const std::vector<Estimate> flat = merge_in_order(parts, width);
  std::vector<std::vector<Estimate>> out(cps.size());
  for (std::size_t c = 0; c < cps.size(); ++c) {
    out[c].assign(flat.begin() + static_cast<std::ptrdiff_t>(c * qs.size()),
                  flat.begin() + static_cast<std::ptrdiff_t>((c + 1) * qs.size()));
  }
  return out;
}

std::vector<PathSummary> sample_paths(const WalkConfig& config) {
  config.validate();
  const std::vector<std::int64_t> steps = grid_steps(config.n_steps, config.record_grid);
  auto parts = run_chunks<std::vector<PathSummary>>(
      config.n_walks, kChunk, [&](std::int64_t begin, std::int64_t end) {
        std::vector<PathSummary> out;
        out.reserve(static_cast<std::size_t>(end - begin));
        for (std::int64_t i = begin; i < end; ++i) {
          Rng rng = Rng::for_stream(config.seed, static_cast<std::uint64_t>(i));
          out.push_back(run_walk(config.n_steps, rng, steps));
        }
        return out;
      });
  std::vector<PathSummary> all;
  all.reserve(static_cast<std::size_t>(config.n_walks));
  for (auto& part : parts) {
    for (auto& s : part) all.push_back(std::move(s));
  }
  return all;
}

ExitSample exit_time_sample(int radius, Norm norm, Rng& rng, std::int64_t cap) {
  if (radius < 1) throw UsageError("exit_time_sample: radius must be >= 1");
  BitStream bits(rng);
  Walker w;
  const std::int64_t r = radius;
  while (w.steps() < cap) {
    w.step(bits);
    const std::int64_t ax = std::llabs(w.x());
    const std::int64_t ay = std::llabs(w.y());
    const bool out = norm == Norm::inf ? (ax > r || ay > r) : (ax + ay > r);
    if (out) return ExitSample{w.steps(), false};
  }
  return ExitSample{cap, true};
}

ExitTimeEstimate estimate_exit_time(int radius, Norm norm, std::int64_t n_samples, std::uint64_t seed) {
  if (n_samples < 1) throw UsageError("estimate_exit_time: n_samples must be >= 1");
  auto parts = run_chunks<ExitTimeEstimate>(n_samples, kChunk, [&](std::int64_t begin, std::int64_t end) {
    ExitTimeEstimate e;
    e.min_steps = kExitTimeCap;
    for (std::int64_t i = begin; i < end; ++i) {
      Rng rng = Rng::for_stream(seed, kExitStreamOffset + static_cast<std::uint64_t>(i));
      const ExitSample s = exit_time_sample(radius, norm, rng);
      e.estimate.add(static_cast<double>(s.steps));
      e.capped += s.capped ? 1 : 0;
      e.min_steps = std::min(e.min_steps, s.steps);
    }
    return e;
  });
  ExitTimeEstimate total;
  total.min_steps = kExitTimeCap;
  for (const auto& p : parts) {
    total.estimate.merge(p.estimate);
    total.capped += p.capped;
    total.min_steps = std::min(total.min_steps, p.min_steps);
  }
  return total;
}

}  // namespace comblab::simulate
