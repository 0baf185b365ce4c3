#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace astau::selftest {

struct CriterionResult {
  std::string id;     // A1 .. A11
  std::string group;  // filter name
  std::string title;
  bool passed = false;
  double measured = 0.0;
  double threshold = 0.0;
  double seconds = 0.0;
  double budget = 0.0;  // wall-clock limit in seconds, 0 = none
  std::string detail;
};

struct CriterionInfo {
  std::string id;
  std::string group;
  std::string title;
};

const std::vector<CriterionInfo>& criteria();

/// Comma-separated ids or group names ("A3", "maya", "A1,ode"); empty runs all.
/// Throws ArgumentError if the filter selects nothing.
std::vector<CriterionResult> run_acceptance(const std::string& filter = "");

/// One line per criterion, then a summary line.
void print_report(std::ostream& os, const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace astau::selftest
