#pragma once

#include <functional>
#include <string>
#include <vector>

namespace ktab {

// Configuration for the exhaustive verification suites.  The default word
// universe is every word of length 1..maxLen over {1..alphabet}.
struct SuiteConfig {
  int alphabet = 4;
  int maxLen = 6;
  int jobs = 0;          // 0: hardware concurrency
  unsigned rngSeed = 20240601;
};

struct SuiteResult {
  std::string name;
  bool pass = false;
  long checks = 0;        // number of individual assertions performed
  double seconds = 0.0;
  std::vector<std::string> notes;  // failures and informational lines
};

using SuiteFn = std::function<SuiteResult(const SuiteConfig&)>;

struct SuiteEntry {
  std::string name;
  std::string description;
  SuiteFn run;
};

// The registered suites, in execution order: one per acceptance criterion.
const std::vector<SuiteEntry>& allSuites();

// Runs one suite by name; throws std::invalid_argument for unknown names.
SuiteResult runSuite(const std::string& name, const SuiteConfig& config);

}  // namespace ktab
