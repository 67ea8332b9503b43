#pragma once

#include <string>
#include <vector>

namespace polyshell {

// outcome of one named end-to-end check: `pass` reports whether every expected
// result held, `notes` lists any mismatches (computed vs expected) or context
struct SuiteResult {
  std::string id;
  bool pass = false;
  double seconds = 0.0;
  std::string notes;
};

// identifiers of all verification suites, in canonical order
const std::vector<std::string>& verification_suite_ids();

// runs one suite by identifier; unknown identifiers throw unsupported_input
SuiteResult run_verification_suite(const std::string& id);

// runs every suite in canonical order
std::vector<SuiteResult> run_all_verification_suites();

}  // namespace polyshell
