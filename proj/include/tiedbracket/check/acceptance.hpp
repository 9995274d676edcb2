// Release checks shared by the acceptance test binary and `selftest`.
#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "tiedbracket/catalog.hpp"

namespace tiedbracket::check {

struct CriterionResult {
  int id = 0;  // 0 for the catalog self-verification
  std::string key;
  std::string title;
  bool passed = false;
  std::vector<std::string> details;
};

struct AcceptanceOptions {
  /// Substring matched against criterion keys and titles; empty runs all.
  std::string filter;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  /// Defaults to the embedded catalog.
  const std::vector<FixtureEntry>* catalog = nullptr;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

/// One "PASS"/"FAIL" line per criterion, details indented below failures.
void print_results(std::ostream& out, const std::vector<CriterionResult>& results, bool verbose);

}  // namespace tiedbracket::check
