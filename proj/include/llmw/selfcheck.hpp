#pragma once

#include <string>
#include <vector>

namespace llmw {

struct CheckResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;  // worst observed error or violation magnitude
  std::string detail;
};

/// Runs the oracle suite on built-in randomized scenarios. Deterministic
/// for a fixed seed.
std::vector<CheckResult> run_selfcheck(unsigned seed = 0);

}  // namespace llmw
