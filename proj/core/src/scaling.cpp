#include "comblab/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "comblab/errors.hpp"
#include "comblab/parallel.hpp"

namespace comblab::scaling {
namespace {

constexpr std::size_t kMinSamples = 100;

void require_samples(std::span<const double> a, const char* what) {
  if (a.size() < kMinSamples) {
    throw UsageError(std::string(what) + ": need at least 100 samples, got " + std::to_string(a.size()));
  }
}

std::vector<double> sorted(std::span<const double> a) {
  std::vector<double> s(a.begin(), a.end());
  std::sort(s.begin(), s.end());
  return s;
}

std::uint64_t salt(Reference r) {
  return 0xa5a5a5a5ULL * (static_cast<std::uint64_t>(r) + 1);
}

double sign(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

}  // namespace

RescaledSnapshot rescale(const simulate::Snapshot& s, std::int64_t n, double t) {
  const auto dn = static_cast<double>(n);
  return RescaledSnapshot{t, static_cast<double>(s.x) / std::pow(dn, 0.25),
                          static_cast<double>(s.y) / std::sqrt(dn),
                          static_cast<double>(s.loops) / std::sqrt(dn)};
}

std::vector<std::vector<RescaledSnapshot>> sample_snapshots(std::int64_t n, std::int64_t n_walks,
                                                            std::span<const double> grid,
                                                            std::uint64_t seed) {
  simulate::WalkConfig config;
  config.n_steps = n;
  config.n_walks = n_walks;
  config.seed = seed;
  config.record_grid.assign(grid.begin(), grid.end());
  const std::vector<simulate::PathSummary> paths = simulate::sample_paths(config);
  std::vector<std::vector<RescaledSnapshot>> out;
  out.reserve(paths.size());
  for (const auto& p : paths) {
    std::vector<RescaledSnapshot> row;
    row.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) row.push_back(rescale(p.snapshots[i], n, grid[i]));
    out.push_back(std::move(row));
  }
  return out;
}

double reference_normal(Rng& rng) {
  std::normal_distribution<double> normal;
  return normal(rng);
}

double reference_abs_normal(Rng& rng) { return std::abs(reference_normal(rng)); }

double reference_brownian_at_local_time(Rng& rng) {
  const double local_time = reference_abs_normal(rng);
  return std::sqrt(local_time) * reference_normal(rng);
}

double reference_brownian_at_local_time_path(Rng& rng, std::int64_t resolution) {
  if (resolution < 1) throw UsageError("resolution must be >= 1");
  BitStream bits(rng);
  std::int64_t b = 0;
  std::int64_t visits = 0;
  for (std::int64_t i = 0; i < resolution; ++i) {
    b += bits.take(1) != 0 ? 1 : -1;
    if (b == 0) ++visits;
  }
  const double scale = std::sqrt(static_cast<double>(resolution));
  const double local_time = static_cast<double>(visits) / scale;
  const auto steps = static_cast<std::int64_t>(std::llround(local_time * static_cast<double>(resolution)));
  std::int64_t w = 0;
  for (std::int64_t i = 0; i < steps; ++i) w += bits.take(1) != 0 ? 1 : -1;
  return static_cast<double>(w) / scale;
}

std::string to_string(Reference r) {
  switch (r) {
    case Reference::abs_normal: return "abs_normal";
    case Reference::normal: return "normal";
    case Reference::brownian_at_local_time: return "brownian_at_local_time";
    case Reference::brownian_at_local_time_path: return "brownian_at_local_time_path";
  }
  return "?";
}

std::vector<double> reference_samples(Reference r, std::int64_t count, std::uint64_t seed) {
  if (count < 0) throw UsageError("reference_samples: count must be non-negative");
  auto parts = run_chunks<std::vector<double>>(count, 4096, [&](std::int64_t begin, std::int64_t end) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(end - begin));
    for (std::int64_t i = begin; i < end; ++i) {
      Rng rng = Rng::for_stream(seed ^ salt(r), static_cast<std::uint64_t>(i));
      switch (r) {
        case Reference::abs_normal: out.push_back(reference_abs_normal(rng)); break;
        case Reference::normal: out.push_back(reference_normal(rng)); break;
        case Reference::brownian_at_local_time: out.push_back(reference_brownian_at_local_time(rng)); break;
        case Reference::brownian_at_local_time_path:
          out.push_back(reference_brownian_at_local_time_path(rng));
          break;
      }
    }
    return out;
  });
  std::vector<double> all;
  all.reserve(static_cast<std::size_t>(count));
  for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return all;
}

double cdf(ReferenceCdf which, double x) {
  const double phi = 0.5 * std::erfc(-x / std::numbers::sqrt2);
  if (which == ReferenceCdf::normal) return phi;
  return x <= 0 ? 0.0 : 2.0 * phi - 1.0;
}

KSResult ks_two_sample(std::span<const double> a, std::span<const double> b) {
  require_samples(a, "ks_two_sample");
  require_samples(b, "ks_two_sample");
  const std::vector<double> sa = sorted(a);
  const std::vector<double> sb = sorted(b);
  const auto na = static_cast<double>(sa.size());
  const auto nb = static_cast<double>(sb.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < sa.size() && j < sb.size()) {
    const double x = std::min(sa[i], sb[j]);
    while (i < sa.size() && sa[i] == x) ++i;
    while (j < sb.size() && sb[j] == x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return KSResult{d, static_cast<std::int64_t>(std::min(sa.size(), sb.size())), "two-sample"};
}

KSResult ks_against(std::span<const double> a, ReferenceCdf reference) {
  require_samples(a, "ks_against");
  const std::vector<double> s = sorted(a);
  const auto n = static_cast<double>(s.size());
  double d = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double f = cdf(reference, s[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return KSResult{d, static_cast<std::int64_t>(s.size()),
                  reference == ReferenceCdf::normal ? "normal" : "abs_normal"};
}

simulate::Estimate sign_product(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw UsageError("sign_product: sample sizes differ");
  simulate::Estimate e;
  for (std::size_t i = 0; i < x.size(); ++i) e.add(sign(x[i]) * sign(y[i]));
  return e;
}

}  // namespace comblab::scaling
