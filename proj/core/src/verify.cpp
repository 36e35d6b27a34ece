#include "comblab/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <utility>

#include "comblab/asymptotics.hpp"
#include "comblab/genfun.hpp"
#include "comblab/oracle.hpp"
#include "comblab/scaling.hpp"
#include "comblab/simulate.hpp"

namespace comblab::verify {
namespace {

using oracle::BarrierSpec;

// Tallies exact comparisons and keeps the first mismatch for the report.
class Tally {
 public:
  void compare(const Rational& got, const Rational& want, const std::string& where) {
    ++total_;
    if (got == want) {
      ++equal_;
    } else if (first_.empty()) {
      first_ = where + ": " + to_fraction_string(got) + " != " + to_fraction_string(want);
    }
  }

  Measurement result(const std::string& label) const {
    std::string measured = std::to_string(equal_) + "/" + std::to_string(total_) + " equal";
    if (!first_.empty()) measured += "; first mismatch " + first_;
    return Measurement{label, measured, "all equal", total_ > 0 && equal_ == total_};
  }

 private:
  long total_ = 0;
  long equal_ = 0;
  std::string first_;
};

std::string at(const char* name, long a, long b) {
  return std::string(name) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// 1. Green function against the position distribution.
std::vector<Measurement> check_green(const Options&) {
  constexpr int kOrder = 40;
  constexpr int kRadius = 6;
  std::vector<oracle::StateDistribution> dists;
  dists.emplace_back();
  for (int n = 1; n <= kOrder; ++n) dists.push_back(dists.back().advanced());
  Tally tally;
  for (int k = -kRadius; k <= kRadius; ++k) {
    for (int l = -kRadius; l <= kRadius; ++l) {
      if (std::abs(k) + std::abs(l) > kRadius) continue;
      const PowerSeries g = genfun::green(k, l, kOrder);
      for (int n = 0; n <= kOrder; ++n) {
        tally.compare(g[static_cast<std::size_t>(n)],
                      dists[static_cast<std::size_t>(n)].mass(oracle::CombVertex{k, l}),
                      "k=" + std::to_string(k) + " l=" + std::to_string(l) + " n=" + std::to_string(n));
      }
    }
  }
  return {tally.result("coeff(green(k,l), n) vs DP mass, |k|+|l|<=6, n<=40")};
}

// 2. Determinant recurrence against the closed form in v.
std::vector<Measurement> check_determinant(const Options&) {
  constexpr int kOrder = 40;
  Tally tally;
  for (int i = -1; i <= 20; ++i) {
    const PowerSeries rec = genfun::a_det(i, kOrder);
    const PowerSeries closed = genfun::a_det_closed_form(i, kOrder);
    for (int n = 0; n <= kOrder; ++n) {
      tally.compare(rec[static_cast<std::size_t>(n)], closed[static_cast<std::size_t>(n)],
                    at("a", i, n));
    }
  }
  return {tally.result("a_i(z/2) recurrence vs closed form, i<=20, order 40")};
}

// 3. Deviation probabilities.
std::vector<Measurement> check_deviation(const Options&) {
  constexpr int kOrder = 30;
  Tally horizontal, vertical;
  for (int h = 0; h <= 4; ++h) {
    const PowerSeries hx = genfun::deviation_H(h, kOrder);
    const PowerSeries hy = genfun::psi_hat_sum(h, kOrder);
    const auto sx = oracle::survival_curve(kOrder, BarrierSpec::deviation(Axis::x, h));
    const auto sy = oracle::survival_curve(kOrder, BarrierSpec::deviation(Axis::y, h));
    for (int n = 0; n <= kOrder; ++n) {
      const auto i = static_cast<std::size_t>(n);
      horizontal.compare(hx[i], sx[i], at("H", h, n));
      vertical.compare(hy[i], sy[i], at("psi_hat_sum", h, n));
    }
  }
  return {horizontal.result("P(D_n^x <= h), h<=4, n<=30"),
          vertical.result("P(D_n^y <= h), h<=4, n<=30")};
}

// 4. The six expectations.
std::vector<Measurement> check_expectations(const Options&) {
  constexpr int kOrder = 20;
  const auto means = oracle::expectations_sequence(kOrder);
  std::vector<Rational> abs_x, abs_y;
  for (const auto& m : means) {
    abs_x.push_back(m.abs_x);
    abs_y.push_back(m.abs_y);
  }
  auto compare = [&](const char* label, const PowerSeries& gf, const Rational& factor,
                     const std::vector<Rational>& want) {
    Tally t;
    for (int n = 0; n <= kOrder; ++n) {
      const auto i = static_cast<std::size_t>(n);
      t.compare(gf[i] * factor, want[i], std::string(label) + " n=" + std::to_string(n));
    }
    return t.result(std::string(label) + ", n<=20");
  };
  const Rational one(1), two(2);
  return {
      compare("E|S_n^x|", genfun::mean_dist_x_gf(kOrder), one, abs_x),
      compare("E|S_n^y|", genfun::mean_dist_y_gf(kOrder), one, abs_y),
      compare("E[D_n^x]", genfun::mean_deviation_gf(Axis::x, kOrder), one,
              oracle::deviation_expectation_sequence(kOrder, Axis::x)),
      compare("E[D_n^y]", genfun::mean_deviation_gf(Axis::y, kOrder), one,
              oracle::deviation_expectation_sequence(kOrder, Axis::y)),
      compare("E[M_n^x]", genfun::span_gf_x(kOrder), two,
              oracle::span_expectation_sequence(kOrder, Axis::x)),
      compare("E[M_n^y]", genfun::span_gf_y(kOrder), two,
              oracle::span_expectation_sequence(kOrder, Axis::y)),
  };
}

// 5. Exit time from the box.
std::vector<Measurement> check_exit_time(const Options&) {
  constexpr int kOrder = 30;
  // Tail sums are taken to this order; P(T_3 > 400) is about 3e-14.
  constexpr int kTailOrder = 400;
  std::vector<Measurement> out;
  Tally tails;
  for (int n = 1; n <= 3; ++n) {
    const PowerSeries theta = genfun::theta_gf(n, kOrder);
    const auto s = oracle::survival_curve(kOrder, BarrierSpec::box(n));
    for (int k = 0; k <= kOrder; ++k) {
      tails.compare(theta[static_cast<std::size_t>(k)], s[static_cast<std::size_t>(k)], at("theta", n, k));
    }
  }
  out.push_back(tails.result("coeff(theta_gf(n), k) vs P(T_n^inf > k), n<=3, k<=30"));

  const Rational t1 = oracle::exit_time_expectation(1, Norm::inf);
  out.push_back(Measurement{"exit_time_expectation(1, inf)", to_fraction_string(t1), "16/5",
                            t1 == Rational(16, 5)});

  for (int n = 1; n <= 3; ++n) {
    const PowerSeries theta = genfun::theta_gf(n, kTailOrder);
    double sum = 0.0;
    for (std::size_t k = theta.order() + 1; k-- > 0;) sum += to_double(theta[k]);
    const double solve = to_double(oracle::exit_time_expectation(n, Norm::inf));
    const double rel = std::abs(sum - solve) / solve;
    out.push_back(Measurement{"tail sum of theta_gf(" + std::to_string(n) + ") vs linear solve",
                              format_double(sum) + " vs " + format_double(solve) +
                                  " (rel " + format_double(rel) + ")",
                              "rel <= 1e-10", rel <= 1e-10});
  }
  return out;
}

// 6. Bounded path counts.
std::vector<Measurement> check_path_counts(const Options&) {
  constexpr int kOrder = 16;
  Tally tally;
  for (int h = 0; h <= 3; ++h) {
    for (int k = 0; k <= 3; ++k) {
      for (int l = -k; l <= h; ++l) {
        const PowerSeries psi = genfun::psi_two_sided(h, k, l, kOrder);
        for (int n = 0; n <= kOrder; ++n) {
          tally.compare(psi[static_cast<std::size_t>(n)], Rational(oracle::path_counts_1d(h, k, l, n)),
                        "h=" + std::to_string(h) + " k=" + std::to_string(k) + " l=" + std::to_string(l) +
                            " n=" + std::to_string(n));
        }
      }
    }
  }
  return {tally.result("psi_two_sided coefficients vs path counts, h,k<=3, n<=16")};
}

// 7. Mellin limits.
std::vector<Measurement> check_mellin(const Options&) {
  const double target = std::numbers::pi / 4.0;
  const double grid[] = {0.9, 0.99, 0.999, 0.9999};
  std::vector<Measurement> out;
  for (auto variant : {asymptotics::MellinVariant::plain, asymptotics::MellinVariant::shifted}) {
    const char* name = variant == asymptotics::MellinVariant::plain ? "plain" : "shifted";
    double previous = INFINITY;
    bool monotone = true;
    std::string errors;
    double last = 0.0;
    for (double v : grid) {
      last = asymptotics::mellin_check(v, variant);
      const double err = std::abs(last - target);
      monotone = monotone && err < previous;
      previous = err;
      errors += (errors.empty() ? "" : ", ") + format_double(err);
    }
    const double rel = std::abs(last - target) / target;
    out.push_back(Measurement{std::string(name) + " at v=0.9999", format_double(last),
                              "pi/4 within 1% (rel " + format_double(rel) + ")", rel <= 0.01});
    out.push_back(Measurement{std::string(name) + " error over v=0.9..0.9999", errors,
                              "strictly decreasing", monotone});
  }
  return out;
}

// 8. Walk dimension from float exit-time solves.
std::vector<Measurement> check_walk_dimension(const Options&) {
  std::vector<Measurement> out;
  std::vector<std::pair<double, double>> points;
  std::vector<double> ratios;
  for (int n : {32, 48, 64, 96, 128, 192, 256}) {
    const double t = oracle::exit_time_expectation_float(n, Norm::inf).value;
    points.emplace_back(n, t);
    if (n == 64 || n == 128 || n == 256) {
      const double ratio = t / (static_cast<double>(n) * n);
      ratios.push_back(ratio);
      out.push_back(Measurement{"E[T_" + std::to_string(n) + "^inf]/n^2", format_double(ratio),
                                "[0.8, 1.2]", ratio >= 0.8 && ratio <= 1.2});
    }
  }
  const bool toward_one = std::abs(ratios[1] - 1) < std::abs(ratios[0] - 1) &&
                          std::abs(ratios[2] - 1) < std::abs(ratios[1] - 1);
  out.push_back(Measurement{"|ratio - 1| over n=64,128,256", "decreasing: " + std::string(toward_one ? "yes" : "no"),
                            "decreasing", toward_one});
  const asymptotics::PowerLawFit fit = asymptotics::fit_power_law(points);
  out.push_back(Measurement{"fitted exponent, n in [32, 256]", format_double(fit.alpha), "2.0 +- 0.1",
                            std::abs(fit.alpha - 2.0) <= 0.1});
  return out;
}

// 9. Vertical constants by Monte Carlo.
std::vector<Measurement> check_vertical_constants(const Options& options) {
  simulate::WalkConfig config;
  config.n_steps = 10'000;
  config.n_walks = 100'000;
  config.seed = options.seed;
  const Quantity qs[] = {Quantity::abs_y, Quantity::dev_y, Quantity::span_y};
  const auto est = simulate::estimate_quantities(config, qs);
  const double root = std::sqrt(static_cast<double>(config.n_steps));
  std::vector<Measurement> out;
  for (std::size_t j = 0; j < 3; ++j) {
    const double c = asymptotics::constant_for(qs[j]).value;
    const double mean = est[j].mean() / root;
    const double se = est[j].stderr_of_mean() / root;
    const double dev = std::abs(mean - c);
    const std::string label = to_string(qs[j]) + "/sqrt(n), n=1e4, N=1e5";
    out.push_back(Measurement{label + " [3 stderr]",
                              format_double(mean) + " (stderr " + format_double(se) + ", |diff| " +
                                  format_double(dev) + ")",
                              format_double(c) + " within " + format_double(3 * se), dev <= 3 * se});
    out.push_back(Measurement{label + " [2%]", format_double(dev / c), "<= 0.02", dev / c <= 0.02});
  }
  return out;
}

// 10. Horizontal exponents by Monte Carlo.
std::vector<Measurement> check_horizontal_exponents(const Options& options) {
  std::vector<std::int64_t> checkpoints;
  for (int e = 10; e <= 18; ++e) checkpoints.push_back(std::int64_t{1} << e);
  simulate::WalkConfig config;
  config.n_steps = checkpoints.back();
  config.n_walks = 20'000;
  config.seed = options.seed;
  const Quantity qs[] = {Quantity::abs_x, Quantity::dev_x, Quantity::span_x};
  const auto est = simulate::estimate_prefixes(config, checkpoints, qs);
  std::vector<Measurement> out;
  for (std::size_t j = 0; j < 3; ++j) {
    std::vector<std::pair<double, double>> points;
    for (std::size_t c = 0; c < checkpoints.size(); ++c) {
      points.emplace_back(static_cast<double>(checkpoints[c]), est[c][j].mean());
    }
    const auto fit = asymptotics::fit_power_law(points);
    out.push_back(Measurement{to_string(qs[j]) + " exponent over n=2^10..2^18", format_double(fit.alpha),
                              "0.25 +- 0.04", std::abs(fit.alpha - 0.25) <= 0.04});
    const double c = asymptotics::constant_for(qs[j]).value;
    const double scaled = est.back()[j].mean() / std::pow(static_cast<double>(checkpoints.back()), 0.25);
    const double rel = std::abs(scaled - c) / c;
    out.push_back(Measurement{to_string(qs[j]) + "/n^(1/4) at n=2^18", format_double(scaled),
                              format_double(c) + " within 15% (rel " + format_double(rel) + ")", rel <= 0.15});
  }
  return out;
}

// 11. Scaling limit at t = 1.
std::vector<Measurement> check_scaling(const Options& options) {
  constexpr std::int64_t kN = 100'000;
  constexpr std::int64_t kWalks = 10'000;
  constexpr std::int64_t kReference = 100'000;
  const double grid[] = {1.0};
  const auto snaps = scaling::sample_snapshots(kN, kWalks, grid, options.seed);
  std::vector<double> xs, ys, ls;
  for (const auto& row : snaps) {
    xs.push_back(row[0].x_scaled);
    ys.push_back(row[0].y_scaled);
    ls.push_back(row[0].loops_scaled);
  }
  const auto ref = scaling::reference_samples(scaling::Reference::brownian_at_local_time, kReference, options.seed);
  const auto ky = scaling::ks_against(ys, scaling::ReferenceCdf::normal);
  const auto kl = scaling::ks_against(ls, scaling::ReferenceCdf::abs_normal);
  const auto kx = scaling::ks_two_sample(xs, ref);
  return {
      Measurement{"KS(Y_n/sqrt(n), N(0,1))", format_double(ky.statistic), "< 0.05", ky.statistic < 0.05},
      Measurement{"KS(L_n/sqrt(n), |N(0,1)|)", format_double(kl.statistic), "< 0.05", kl.statistic < 0.05},
      Measurement{"KS(X_{L_n}/n^(1/4), sqrt|N| N')", format_double(kx.statistic), "< 0.05", kx.statistic < 0.05},
  };
}

}  // namespace

std::string to_string(Tier t) {
  switch (t) {
    case Tier::exact: return "exact";
    case Tier::numeric: return "numeric";
    case Tier::montecarlo: return "montecarlo";
    case Tier::scaling: return "scaling";
  }
  return "?";
}

bool CheckResult::passed() const {
  if (measurements.empty()) return false;
  for (const auto& m : measurements) {
    if (!m.passed) return false;
  }
  return true;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks = {
      {1, Tier::exact, "Green function vs exact DP", check_green},
      {2, Tier::exact, "tridiagonal determinant closed form", check_determinant},
      {3, Tier::exact, "maximal deviation probabilities", check_deviation},
      {4, Tier::exact, "distance, deviation and span expectations", check_expectations},
      {5, Tier::exact, "exit time from the box", check_exit_time},
      {6, Tier::exact, "bounded 1-D path counts", check_path_counts},
      {7, Tier::numeric, "Mellin limits", check_mellin},
      {8, Tier::numeric, "walk dimension", check_walk_dimension},
      {9, Tier::montecarlo, "vertical constants", check_vertical_constants},
      {10, Tier::montecarlo, "horizontal exponents", check_horizontal_exponents},
      {11, Tier::scaling, "scaling limit", check_scaling},
  };
  return checks;
}

CheckResult run_check(const Check& check, const Options& options) {
  CheckResult r;
  r.id = check.id;
  r.tier = check.tier;
  r.title = check.title;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.measurements = check.run(options);
  } catch (const std::exception& e) {
    r.measurements.push_back(Measurement{"exception", e.what(), "none", false});
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CheckResult> run_tiers(const std::vector<Tier>& tiers, const Options& options) {
  std::vector<CheckResult> out;
  for (const auto& c : all_checks()) {
    for (Tier t : tiers) {
      if (c.tier == t) {
        out.push_back(run_check(c, options));
        break;
      }
    }
  }
  return out;
}

}  // namespace comblab::verify
