#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

// The acceptance checks, shared by the command line and the test suite.
namespace comblab::verify {

enum class Tier { exact, numeric, montecarlo, scaling };

std::string to_string(Tier t);

/// One measured value inside a check.
struct Measurement {
  std::string label;
  std::string measured;
  std::string expected;
  bool passed = false;
};

struct CheckResult {
  int id = 0;
  Tier tier = Tier::exact;
  std::string title;
  std::vector<Measurement> measurements;
  double seconds = 0.0;

  bool passed() const;
};

struct Options {
  std::uint64_t seed = 1;
};

struct Check {
  int id;
  Tier tier;
  std::string title;
  std::function<std::vector<Measurement>(const Options&)> run;
};

/// Checks 1 through 11 in order.
const std::vector<Check>& all_checks();

/// Runs a check and times it. Exceptions become a failed measurement.
CheckResult run_check(const Check& check, const Options& options);

/// Runs every check of the given tiers, in id order.
std::vector<CheckResult> run_tiers(const std::vector<Tier>& tiers, const Options& options);

/// Formats as in CSV output: exact fractions as "p/q", doubles with 15
/// significant digits.
std::string format_double(double v);

}  // namespace comblab::verify
