#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "comblab/rng.hpp"
#include "comblab/types.hpp"

namespace comblab::simulate {

struct WalkConfig {
  std::int64_t n_steps = 1;
  std::int64_t n_walks = 1;
  std::uint64_t seed = 0;
  /// Time fractions t in (0, 1]; snapshots are taken at step floor(n t).
  std::vector<double> record_grid;

  /// Throws UsageError when n_steps < 1, n_walks < 1 or a grid time is
  /// outside (0, 1].
  void validate() const;
};

/// (X_{L_k}, Y_k, L_k) at step k. On the comb X_{L_k} is simply S_k^x.
struct Snapshot {
  std::int64_t step = 0;
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t loops = 0;

  friend bool operator==(const Snapshot&, const Snapshot&) = default;
};

struct PathSummary {
  std::int64_t final_x = 0, final_y = 0;
  std::int64_t dev_x = 0, dev_y = 0;
  std::int64_t span_x = 0, span_y = 0;
  std::int64_t loops = 0;
  /// Largest 1-norm and infinity-norm of S_i over the path.
  std::int64_t max_norm1 = 0, max_norm_inf = 0;
  std::vector<Snapshot> snapshots;

  double value(Quantity q) const;
  friend bool operator==(const PathSummary&, const PathSummary&) = default;
};

/// Running mean and variance; merge() pools two estimates exactly
/// (up to floating-point rounding).
class Estimate {
 public:
  void add(double x) noexcept;
  void merge(const Estimate& other) noexcept;

  std::int64_t count() const noexcept { return count_; }
  double mean() const noexcept { return mean_; }
  /// Sample variance (count - 1 in the denominator); 0 for count < 2.
  double variance() const noexcept;
  /// Standard error of the mean.
  double stderr_of_mean() const noexcept;

 private:
  std::int64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// Online state of one comb walk.
class Walker {
 public:
  void step(BitStream& bits) noexcept;
  std::int64_t steps() const noexcept { return steps_; }
  std::int64_t x() const noexcept { return x_; }
  std::int64_t y() const noexcept { return y_; }
  std::int64_t loops() const noexcept { return loops_; }
  PathSummary summary() const;

 private:
  std::int64_t steps_ = 0, x_ = 0, y_ = 0, loops_ = 0;
  std::int64_t min_x_ = 0, max_x_ = 0, min_y_ = 0, max_y_ = 0;
  std::int64_t max_norm1_ = 0, max_norm_inf_ = 0;
};

/// Samples one path of n_steps steps. Snapshots are recorded at the given
/// steps (ascending, each in [0, n_steps]).
PathSummary run_walk(std::int64_t n_steps, Rng& rng, std::span<const std::int64_t> record_steps = {});

/// Snapshot steps floor(n t) for each t of the grid.
std::vector<std::int64_t> grid_steps(std::int64_t n_steps, std::span<const double> grid);

/// Mean and standard error of one statistic over config.n_walks walks.
Estimate estimate_quantity(const WalkConfig& config, Quantity quantity);

/// Same for several statistics from one set of walks.
std::vector<Estimate> estimate_quantities(const WalkConfig& config, std::span<const Quantity> quantities);

/// Statistics of the prefixes of each walk: result[i][j] estimates
/// quantities[j] after checkpoints[i] steps. config.n_steps must be at least
/// the largest checkpoint.
std::vector<std::vector<Estimate>> estimate_prefixes(const WalkConfig& config,
                                                     std::span<const std::int64_t> checkpoints,
                                                     std::span<const Quantity> quantities);

/// All walk summaries (walk i at index i), for distributional tests.
std::vector<PathSummary> sample_paths(const WalkConfig& config);

struct ExitSample {
  std::int64_t steps = 0;
  bool capped = false;
};

inline constexpr std::int64_t kExitTimeCap = 1'000'000'000;

/// First step at which the walk leaves the ball of the given radius. If the
/// walk is still inside after cap steps, returns {cap, true}.
ExitSample exit_time_sample(int radius, Norm norm, Rng& rng, std::int64_t cap = kExitTimeCap);

struct ExitTimeEstimate {
  Estimate estimate;
  std::int64_t capped = 0;
  std::int64_t min_steps = 0;
};

ExitTimeEstimate estimate_exit_time(int radius, Norm norm, std::int64_t n_samples, std::uint64_t seed);

}  // namespace comblab::simulate
