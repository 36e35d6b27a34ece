#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "output.hpp"

namespace comblab::cli {

struct CoeffsOptions {
  std::string name;
  std::size_t order = 10;
  int h = 0, k = 0, l = 0, i = 0, n = 1;
};

Table cmd_coeffs(const CoeffsOptions& options);

struct VerifyOutcome {
  Table table;
  bool passed = false;
};

/// suite: exact, numeric, montecarlo, scaling or all.
VerifyOutcome cmd_verify(const std::string& suite, std::uint64_t seed);

Table cmd_simulate(std::int64_t n, std::int64_t walks, const std::vector<std::string>& quantities,
                   std::uint64_t seed);

/// mode: exact, float or mc.
Table cmd_exit_time(int radius, const std::string& norm, const std::string& mode, std::int64_t samples,
                    std::uint64_t seed);

/// Fits either the (n, value) rows of a CSV file or the float DP trend of a
/// quantity at the given n.
Table cmd_fit(const std::string& input, const std::string& trend, const std::vector<int>& ns);

Table cmd_scaling(std::int64_t n, std::int64_t walks, const std::vector<double>& grid,
                  std::int64_t reference_draws, std::uint64_t seed);

}  // namespace comblab::cli
