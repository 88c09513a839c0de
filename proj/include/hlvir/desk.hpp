#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "hlvir/vertex.hpp"

namespace hlvir {

/// Outcome of one acceptance criterion of the desk-scale suite.
struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = true;
  long checks = 0;
  long failures = 0;
  double seconds = 0.0;
  /// Up to a few failing checks, one per line.
  std::vector<std::string> failed;
  /// Qualifications printed with the result.
  std::string remark;

  /// "PASS  criterion 4: <title> (N checks, T s)" plus indented failures.
  [[nodiscard]] std::string to_text() const;
};

struct DeskOptions {
  CacheOptions cache = CacheOptions::from_environment();
  /// Criteria to run; empty means 1 to 11.
  std::set<int> only;
  /// Called after each criterion finishes.
  std::function<void(const CriterionResult&)> on_result;
};

/// Runs the exact desk-scale sweeps. Every check compares canonical forms.
std::vector<CriterionResult> run_desk_suite(const DeskOptions& options = {});

/// Number of criteria run_desk_suite knows about.
inline constexpr int kDeskCriteria = 11;

}  // namespace hlvir
