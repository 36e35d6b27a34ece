#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "comblab/rng.hpp"
#include "comblab/simulate.hpp"

namespace comblab::scaling {

/// (X_{L_k} / n^{1/4}, Y_k / n^{1/2}, L_k / n^{1/2}) at k = floor(n t).
struct RescaledSnapshot {
  double t = 0.0;
  double x_scaled = 0.0;
  double y_scaled = 0.0;
  double loops_scaled = 0.0;
};

RescaledSnapshot rescale(const simulate::Snapshot& s, std::int64_t n, double t);

/// One row per walk, one snapshot per grid time. Requires n >= 1 and every
/// grid time in (0, 1], ascending.
std::vector<std::vector<RescaledSnapshot>> sample_snapshots(std::int64_t n, std::int64_t n_walks,
                                                            std::span<const double> grid,
                                                            std::uint64_t seed);

/// Draws from |N(0,1)|, N(0,1), and W_L = sqrt(L) Z with L ~ |N(0,1)|
/// independent of Z ~ N(0,1).
double reference_abs_normal(Rng& rng);
double reference_normal(Rng& rng);
double reference_brownian_at_local_time(Rng& rng);

/// Slow cross-check of reference_brownian_at_local_time: the local time at 0
/// of a simple random walk of `resolution` steps (visits / sqrt(resolution))
/// drives a second, independent walk run for L * resolution steps.
double reference_brownian_at_local_time_path(Rng& rng, std::int64_t resolution = 10'000);

enum class Reference { abs_normal, normal, brownian_at_local_time, brownian_at_local_time_path };

std::string to_string(Reference r);

/// count draws, draw i from stream (seed, i).
std::vector<double> reference_samples(Reference r, std::int64_t count, std::uint64_t seed);

struct KSResult {
  double statistic = 0.0;
  std::int64_t n_samples = 0;
  std::string reference;
};

enum class ReferenceCdf { normal, abs_normal };

double cdf(ReferenceCdf which, double x);

/// sup |F_a - F_b| over the pooled sample. Each sample needs >= 100 values.
KSResult ks_two_sample(std::span<const double> a, std::span<const double> b);

/// sup |F_a - F| for a continuous reference F. Needs >= 100 values.
KSResult ks_against(std::span<const double> a, ReferenceCdf reference);

/// Mean and standard error of sign(x) sign(y) over pairs.
simulate::Estimate sign_product(std::span<const double> x, std::span<const double> y);

}  // namespace comblab::scaling
