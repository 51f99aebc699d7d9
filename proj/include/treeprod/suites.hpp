#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace treeprod {

enum class NumericMode { Exact, Float };

struct SuiteConfig {
  std::uint64_t seed = 1;
  long long samples = 0;  // 0 = suite default
  NumericMode mode = NumericMode::Exact;
  bool inject_failure = false;  // runner self-test: forces one violation
};

struct SuiteResult {
  std::string name;
  long long cases = 0;
  long long checks = 0;
  long long violations = 0;
  std::vector<std::string> csv;  // header line + one row per case

  bool ok() const { return violations == 0; }
};

/// Available suites: metric, isometry, geodesic, types, bigon, ble.
std::vector<std::string> suite_names();

SuiteResult run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace treeprod
