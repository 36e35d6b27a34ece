// One line per acceptance criterion, then the measurements behind it.
// Exit status 1 if any criterion fails.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "comblab/verify.hpp"

using namespace comblab::verify;

int main(int argc, char** argv) {
  Options options;
  if (argc > 1) options.seed = std::strtoull(argv[1], nullptr, 10);

  int failed = 0;
  for (const Check& check : all_checks()) {
    const CheckResult r = run_check(check, options);
    std::printf("criterion %2d [%s] %-28s %s (%.1fs)\n", r.id, to_string(r.tier).c_str(), r.title.c_str(),
                r.passed() ? "PASS" : "FAIL", r.seconds);
    for (const Measurement& m : r.measurements) {
      std::printf("    %-4s %s: %s (expected %s)\n", m.passed ? "ok" : "FAIL", m.label.c_str(),
                  m.measured.c_str(), m.expected.c_str());
    }
    std::fflush(stdout);
    if (!r.passed()) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(all_checks().size()) - failed,
              all_checks().size());
  return failed == 0 ? 0 : 1;
}
