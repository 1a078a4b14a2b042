#pragma once

#include <string>
#include <vector>

#include "fibtri/identities.hpp"

namespace fibtri {

struct SuiteResult {
  std::string name;
  bool pass = true;
  double seconds = 0.0;
  std::string detail;  // first failure, or a short summary
};

struct RunReport {
  std::vector<SuiteResult> suites;
  std::vector<std::string> notes;

  bool all_pass() const;
  long passed() const;
  long failed() const;
};

// Runs every verification suite: quiver-spec validation, oracle triple
// agreement, golden rows, partition formulas, the theorem and corollaries,
// knight's moves, the SE-difference table, operator identities, polynomial
// regression, the Delannoy checks, and output round-trips.
RunReport run_verify(long t_max, long n_max_delannoy);

std::string render_report(const RunReport& report);

}  // namespace fibtri
