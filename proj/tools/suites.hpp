#pragma once

// Verification suites run by `trilevel verify`.

#include <string>
#include <vector>

namespace trilevel::cli {

struct CheckResult {
  std::string suite;
  std::string name;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string note;  // e.g. "expected broken, observed"
};

/// Suite names accepted by run_suite(), in execution order for "all".
const std::vector<std::string>& suite_names();

/// Runs "algebra", "oracle", "symmetry", "correspondence" or "all".
/// Throws std::invalid_argument for other names.
std::vector<CheckResult> run_suite(const std::string& name);

}  // namespace trilevel::cli
