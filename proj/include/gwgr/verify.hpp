#pragma once

// Property suites behind `gwgr verify`.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gwgr {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
  std::string reproduce;  // CLI command that reproduces a failure, if any
};

struct VerifyOptions {
  std::optional<int> max_k;  // each suite has its own default
  std::optional<int> max_d;
  double tol = 1e-9;
};

// Known suite names: sympoly, critical, pipelines, charclass, all.
bool is_known_suite(std::string_view suite);
std::vector<CheckResult> run_suite(std::string_view suite, const VerifyOptions& options);

}  // namespace gwgr
