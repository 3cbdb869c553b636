#pragma once

/// Seeded property suites behind the CLI selftest command.  Every suite
/// derives one generator per trial from the master seed, so reports are
/// reproducible regardless of evaluation order.

#include <cstdint>
#include <string>
#include <vector>

namespace twistinv {

struct SuiteResult {
  std::string name;
  bool passed = false;
  int trials = 0;
  int failures = 0;
  double worst_residual = 0.0;
  std::string detail;
};

const std::vector<std::string>& selftest_suite_names();

/// Runs one suite ("invariance", "syzygy", "dualize", "normalform",
/// "reconstruction", "evenodd") or "all"; throws std::invalid_argument for
/// unknown names or trials < 1.
std::vector<SuiteResult> run_selftest(const std::string& suite, std::uint64_t seed, int trials);

/// Deterministic, byte-stable plain-text report.
std::string format_selftest_report(const std::vector<SuiteResult>& results);

}  // namespace twistinv
