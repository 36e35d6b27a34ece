#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "comblab/asymptotics.hpp"
#include "comblab/errors.hpp"
#include "comblab/float_trend.hpp"
#include "comblab/genfun.hpp"
#include "comblab/oracle.hpp"
#include "comblab/scaling.hpp"
#include "comblab/simulate.hpp"
#include "comblab/verify.hpp"

namespace comblab::cli {
namespace {

using verify::format_double;

PowerSeries named_series(const CoeffsOptions& o) {
  namespace g = genfun;
  const std::string& name = o.name;
  const std::size_t order = o.order;
  if (name == "green-G") return g::green_G(order);
  if (name == "green-F1") return g::green_F1(order);
  if (name == "green-F2") return g::green_F2(order);
  if (name == "green") return g::green(o.k, o.l, order);
  if (name == "excursion-E") return g::excursion_E(order);
  if (name == "tooth-return") return g::tooth_return(order);
  if (name == "w") return g::w_of_z(order);
  if (name == "v-horizontal") return g::v_horizontal(order);
  if (name == "v-vertical") return g::v_vertical(order);
  if (name == "a-det") return g::a_det(o.i, order);
  if (name == "a-det-closed") return g::a_det_closed_form(o.i, order);
  if (name == "psi-two-sided") return g::psi_two_sided(o.h, o.k, o.l, order);
  if (name == "deviation-H") return g::deviation_H(o.h, order);
  if (name == "psi-hat") return g::psi_hat(o.h, o.l, order);
  if (name == "psi-hat-sum") return g::psi_hat_sum(o.h, order);
  if (name == "mean-dist-x") return g::mean_dist_x_gf(order);
  if (name == "mean-dist-y") return g::mean_dist_y_gf(order);
  if (name == "mean-deviation-x") return g::mean_deviation_gf(Axis::x, order);
  if (name == "mean-deviation-y") return g::mean_deviation_gf(Axis::y, order);
  if (name == "span-x") return g::span_gf_x(order);
  if (name == "span-y") return g::span_gf_y(order);
  if (name == "theta") return g::theta_gf(o.n, order);
  std::string known;
  for (const auto& n : g::catalog_names()) known += (known.empty() ? "" : ", ") + n;
  throw UsageError("unknown generating function '" + name + "' (known: " + known + ")");
}

std::vector<verify::Tier> parse_suite(const std::string& suite) {
  using verify::Tier;
  if (suite == "exact") return {Tier::exact};
  if (suite == "numeric") return {Tier::numeric};
  if (suite == "montecarlo") return {Tier::montecarlo};
  if (suite == "scaling") return {Tier::scaling};
  if (suite == "all") return {Tier::exact, Tier::numeric, Tier::montecarlo, Tier::scaling};
  throw UsageError("unknown suite '" + suite + "' (expected exact, numeric, montecarlo, scaling or all)");
}

std::vector<std::pair<double, double>> read_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::vector<std::pair<double, double>> points;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string a, b;
    std::getline(ss, a, ',');
    std::getline(ss, b, ',');
    try {
      std::size_t used_a = 0, used_b = 0;
      const double n = std::stod(a, &used_a);
      const double v = std::stod(b, &used_b);
      points.emplace_back(n, v);
    } catch (const std::exception&) {
      if (line_no == 1) continue;  // header
      throw UsageError(path + ":" + std::to_string(line_no) + ": expected 'n,value'");
    }
  }
  return points;
}

}  // namespace

Table cmd_coeffs(const CoeffsOptions& options) {
  const PowerSeries s = named_series(options);
  Table t({"n", "coefficient", "decimal"});
  for (std::size_t n = 0; n <= s.order(); ++n) {
    t.add_row({std::to_string(n), to_fraction_string(s[n]), format_double(to_double(s[n]))});
  }
  return t;
}

VerifyOutcome cmd_verify(const std::string& suite, std::uint64_t seed) {
  const auto results = verify::run_tiers(parse_suite(suite), verify::Options{seed});
  VerifyOutcome out{Table({"check", "tier", "title", "measurement", "measured", "expected", "status", "seconds"}),
                    true};
  for (const auto& r : results) {
    out.passed = out.passed && r.passed();
    for (const auto& m : r.measurements) {
      out.table.add_row({std::to_string(r.id), verify::to_string(r.tier), r.title, m.label, m.measured, m.expected,
                         m.passed ? "pass" : "fail", format_double(r.seconds)});
    }
  }
  return out;
}

Table cmd_simulate(std::int64_t n, std::int64_t walks, const std::vector<std::string>& quantities,
                   std::uint64_t seed) {
  std::vector<Quantity> qs;
  for (const auto& q : quantities) qs.push_back(parse_quantity(q));
  if (qs.empty()) qs.assign(kAllQuantities.begin(), kAllQuantities.end());
  simulate::WalkConfig config;
  config.n_steps = n;
  config.n_walks = walks;
  config.seed = seed;
  const auto est = simulate::estimate_quantities(config, qs);
  Table t({"quantity", "n_steps", "n_walks", "seed", "mean", "stderr"});
  for (std::size_t j = 0; j < qs.size(); ++j) {
    t.add_row({to_string(qs[j]), std::to_string(n), std::to_string(walks), std::to_string(seed),
               format_double(est[j].mean()), format_double(est[j].stderr_of_mean())});
  }
  return t;
}

Table cmd_exit_time(int radius, const std::string& norm_name, const std::string& mode, std::int64_t samples,
                    std::uint64_t seed) {
  const Norm norm = parse_norm(norm_name);
  Table t({"radius", "norm", "mode", "value", "decimal", "error"});
  const std::string r = std::to_string(radius);
  if (mode == "exact") {
    const Rational v = oracle::exit_time_expectation(radius, norm);
    t.add_row({r, to_string(norm), mode, to_fraction_string(v), format_double(to_double(v)), "0"});
  } else if (mode == "float") {
    const auto s = oracle::exit_time_expectation_float(radius, norm);
    t.add_row({r, to_string(norm), mode, format_double(s.value), format_double(s.value),
               format_double(s.relative_residual)});
  } else if (mode == "mc") {
    const auto e = simulate::estimate_exit_time(radius, norm, samples, seed);
    t.add_row({r, to_string(norm), mode, format_double(e.estimate.mean()), format_double(e.estimate.mean()),
               format_double(e.estimate.stderr_of_mean())});
  } else {
    throw UsageError("unknown mode '" + mode + "' (expected exact, float or mc)");
  }
  return t;
}

Table cmd_fit(const std::string& input, const std::string& trend, const std::vector<int>& ns) {
  std::vector<std::pair<double, double>> points;
  if (!input.empty() && !trend.empty()) throw UsageError("give either --input or --trend, not both");
  if (!input.empty()) {
    points = read_points(input);
  } else if (!trend.empty()) {
    const Quantity q = parse_quantity(trend);
    for (const auto& p : float_trend::expectation_trend(ns)) points.emplace_back(p.n, p.get(q));
  } else {
    throw UsageError("fit needs --input FILE or --trend QUANTITY");
  }
  const auto fit = asymptotics::fit_power_law(points);
  Table t({"C", "alpha", "residual", "n_min", "n_max", "points"});
  t.add_row({format_double(fit.C), format_double(fit.alpha), format_double(fit.residual), format_double(fit.n_min),
             format_double(fit.n_max), std::to_string(points.size())});
  return t;
}

Table cmd_scaling(std::int64_t n, std::int64_t walks, const std::vector<double>& grid,
                  std::int64_t reference_draws, std::uint64_t seed) {
  const auto snaps = scaling::sample_snapshots(n, walks, grid, seed);
  const auto ref = scaling::reference_samples(scaling::Reference::brownian_at_local_time, reference_draws, seed);
  Table t({"t", "statistic", "value", "reference", "n_samples"});
  for (std::size_t g = 0; g < grid.size(); ++g) {
    std::vector<double> xs, ys, ls;
    for (const auto& row : snaps) {
      xs.push_back(row[g].x_scaled);
      ys.push_back(row[g].y_scaled);
      ls.push_back(row[g].loops_scaled);
    }
    const std::string tt = format_double(grid[g]);
    const std::string count = std::to_string(walks);
    // Y_{nt}/sqrt(n) ~ N(0, t), L_{nt}/sqrt(n) ~ sqrt(t)|N|, X ~ t^{1/4} W_L.
    const double sy = std::sqrt(grid[g]);
    const double sx = std::pow(grid[g], 0.25);
    for (auto& v : ys) v /= sy;
    for (auto& v : ls) v /= sy;
    for (auto& v : xs) v /= sx;
    const auto ky = scaling::ks_against(ys, scaling::ReferenceCdf::normal);
    const auto kl = scaling::ks_against(ls, scaling::ReferenceCdf::abs_normal);
    const auto kx = scaling::ks_two_sample(xs, ref);
    const auto corr = scaling::sign_product(xs, ys);
    t.add_row({tt, "ks_y", format_double(ky.statistic), "normal", count});
    t.add_row({tt, "ks_loops", format_double(kl.statistic), "abs_normal", count});
    t.add_row({tt, "ks_x", format_double(kx.statistic), "brownian_at_local_time", count});
    t.add_row({tt, "sign_product_mean", format_double(corr.mean()), "0", count});
    t.add_row({tt, "sign_product_stderr", format_double(corr.stderr_of_mean()), "", count});
  }
  return t;
}

}  // namespace comblab::cli
