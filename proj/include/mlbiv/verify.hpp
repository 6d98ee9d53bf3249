#pragma once

// Property suites: every identity the library promises, checked numerically
// against closed forms, independent oracles or each other.

#include <string>
#include <vector>

namespace mlbiv {

struct SuiteReport {
  std::string suite;
  int cases = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  // Suites that also check a convergence rate under grid halving.
  double observed_order = 0.0;
  double min_order = 0.0;  // 0: no rate check
  double seconds = 0.0;
  std::string note;
};

const std::vector<std::string>& suite_names();

/// Throws DomainError for an unknown name. Evaluation errors inside a suite
/// are caught and reported as a failure with the message in `note`.
SuiteReport run_suite(const std::string& name);

/// "all" or a comma separated list.
std::vector<SuiteReport> run_suites(const std::string& selector);

std::string to_json(const SuiteReport& r);
std::string to_json(const std::vector<SuiteReport>& reports);

}  // namespace mlbiv
