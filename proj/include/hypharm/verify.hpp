#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hypharm {

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;   // worst deviation observed over the check's grid
  double tolerance = 0.0;
};

struct VerifyConfig {
  int n = 3;
  double p = 2.0;
  double radius = 0.5;
  int nodes = 200;
  int samples = 200000;
  std::uint64_t seed = 1u;
};

std::vector<std::string> verify_suite_names();

// Runs one named suite ("all" chains every suite) and returns its checks.
// Unknown names throw DomainError.
std::vector<CheckResult> run_verify_suite(const std::string& suite, const VerifyConfig& cfg);

}  // namespace hypharm
