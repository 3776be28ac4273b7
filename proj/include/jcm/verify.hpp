#pragma once

// Named identity suites at fixed desk-scale parameters.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace jcm {

struct CheckResult {
  std::string name;
  double max_deviation;
  double tolerance;
  bool passed;
  /// Set when the check threw instead of producing a number.
  std::string error;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  [[nodiscard]] bool passed() const;
};

/// parity, localization, counting, radon, appendix.
std::vector<std::string_view> suite_names();

/// Runs a suite. Library errors inside a check are recorded as a failed check,
/// never thrown. Throws InvalidArgument only for an unknown suite name.
SuiteReport run_suite(std::string_view suite, int threads = 1);

/// One line per check: `PASS|FAIL <suite>/<check> max_dev=<..> tol=<..>`.
void write_report(const SuiteReport& report, std::ostream& out);

}  // namespace jcm
