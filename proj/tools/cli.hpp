#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crossnum::cli {

/// Exit codes: 0 success, 1 verification or computation failure, 2 usage
/// or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Deterministic identity checks behind `crossnum verify`. `quick` shrinks
/// every range so the suite finishes in about a second.
std::vector<CheckResult> run_verification(bool quick);

}  // namespace crossnum::cli
