#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace lions::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteOptions {
  int graph_max_n = 7;      // connected-graph census bound
  int tree_max_n = 9;       // tree census bound
  int sample_count = 500;   // subsample size for the randomized census variant
  long replay_cases = 1000; // paired-replay cases per engine-property check
  uint64_t seed = 20250810; // fixed seed for all randomized suites
  bool full_census = true;  // false = subsample-only where a full census is heavy
  long node_budget = 0;
};

/// Named, individually runnable acceptance suites:
///   trees, binary-trees, general-upper, counterexample, monotone, boundary,
///   complete-graphs, binary-tree-monotone, cops, engine-properties, all.
/// Per-check progress lines go to `log` when non-null.
std::vector<CheckResult> run_suite(const std::string& name,
                                   const SuiteOptions& opts,
                                   std::ostream* log = nullptr);

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// All suites in order, sharing one solver cache.
std::vector<SuiteReport> run_all(const SuiteOptions& opts,
                                 std::ostream* log = nullptr);

std::vector<std::string> suite_names();

}  // namespace lions::verify
