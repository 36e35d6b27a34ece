#include <CLI11.hpp>
#include <chrono>
#include <iostream>

#include "commands.hpp"
#include "comblab/errors.hpp"

namespace {

using namespace comblab::cli;

struct Common {
  std::uint64_t seed = 1;
  std::string format = "csv";
  std::string out;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", c.out, "Output file (default: standard output)");
}

Format to_format(const std::string& s) { return s == "json" ? Format::json : Format::csv; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and Monte Carlo laboratory for the simple random walk on the 2-D comb"};
  app.set_version_flag("--version", std::string(COMBLAB_VERSION));
  app.require_subcommand(1);

  Common common;
  CoeffsOptions coeffs;
  auto* c_coeffs = app.add_subcommand("coeffs", "Exact coefficients of a generating function");
  c_coeffs->set_help_flag("--help", "Print this help message and exit");
  c_coeffs->add_option("name", coeffs.name, "Generating function name")->required();
  c_coeffs->add_option("--order", coeffs.order, "Truncation order")->capture_default_str();
  c_coeffs->add_option("--h", coeffs.h, "Upper barrier / deviation level");
  c_coeffs->add_option("--k", coeffs.k, "Horizontal offset or lower barrier");
  c_coeffs->add_option("--l", coeffs.l, "Vertical offset or path endpoint");
  c_coeffs->add_option("--i", coeffs.i, "Determinant index");
  c_coeffs->add_option("--n", coeffs.n, "Box radius for theta");
  add_common(c_coeffs, common);

  std::string suite = "exact";
  auto* c_verify = app.add_subcommand("verify", "Run acceptance checks; exit 1 on failure");
  c_verify->add_option("suite", suite, "exact, numeric, montecarlo, scaling or all")->capture_default_str();
  add_common(c_verify, common);

  auto* c_repro = app.add_subcommand("reproduce-paper", "Same as 'verify all'");
  add_common(c_repro, common);

  std::int64_t n = 10'000, walks = 10'000, samples = 100'000, reference = 100'000;
  std::vector<std::string> quantities;
  auto* c_sim = app.add_subcommand("simulate", "Monte Carlo estimates of walk statistics");
  c_sim->add_option("--n", n, "Steps per walk")->capture_default_str();
  c_sim->add_option("--walks", walks, "Number of walks")->capture_default_str();
  c_sim->add_option("--quantity", quantities,
                    "abs_x, abs_y, dev_x, dev_y, span_x, span_y, norm1, norm_inf, loops (default: all)");
  add_common(c_sim, common);

  int radius = 1;
  std::string norm = "inf", mode = "exact";
  auto* c_exit = app.add_subcommand("exit-time", "Expected exit time from a ball");
  c_exit->add_option("--radius", radius, "Ball radius")->capture_default_str();
  c_exit->add_option("--norm", norm, "1 or inf")->capture_default_str();
  c_exit->add_option("--mode", mode, "exact, float or mc")->capture_default_str();
  c_exit->add_option("--samples", samples, "Samples for --mode mc")->capture_default_str();
  add_common(c_exit, common);

  std::string input, trend;
  std::vector<int> ns{256, 362, 512, 724, 1024, 1448, 2048};
  auto* c_fit = app.add_subcommand("fit", "Power-law fit C n^alpha");
  c_fit->add_option("--input", input, "CSV file with columns n,value");
  c_fit->add_option("--trend", trend, "Fit the float DP expectation of this quantity instead");
  c_fit->add_option("--ns", ns, "Step counts for --trend")->delimiter(',')->capture_default_str();
  add_common(c_fit, common);

  std::vector<double> grid{1.0};
  std::int64_t scale_n = 100'000;
  auto* c_scale = app.add_subcommand("scaling", "Kolmogorov-Smirnov tests of the rescaled walk");
  c_scale->add_option("--n", scale_n, "Steps per walk")->capture_default_str();
  c_scale->add_option("--walks", walks, "Number of walks")->capture_default_str();
  c_scale->add_option("--grid", grid, "Time fractions in (0, 1]")->delimiter(',')->capture_default_str();
  c_scale->add_option("--reference", reference, "Reference draws")->capture_default_str();
  add_common(c_scale, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  RunManifest manifest;
  manifest.arguments.assign(argv + 1, argv + argc);
  manifest.seed = common.seed;
  manifest.version = COMBLAB_VERSION;
  int status = 0;
  try {
    Table table({});
    CLI::App* chosen = app.get_subcommands().front();
    manifest.command = chosen->get_name();
    if (chosen == c_coeffs) {
      table = cmd_coeffs(coeffs);
    } else if (chosen == c_verify || chosen == c_repro) {
      auto outcome = cmd_verify(chosen == c_repro ? "all" : suite, common.seed);
      table = std::move(outcome.table);
      status = outcome.passed ? 0 : 1;
    } else if (chosen == c_sim) {
      table = cmd_simulate(n, walks, quantities, common.seed);
    } else if (chosen == c_exit) {
      table = cmd_exit_time(radius, norm, mode, samples, common.seed);
    } else if (chosen == c_fit) {
      table = cmd_fit(input, trend, ns);
    } else if (chosen == c_scale) {
      table = cmd_scaling(scale_n, walks, grid, reference, common.seed);
    }
    manifest.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(table, to_format(common.format), common.out, manifest);
  } catch (const comblab::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const comblab::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return status;
}
