// Desk-scale acceptance suite: exact and property-based checks shared by
// the corpus runner and the test harness.
#ifndef HYPOW_ACCEPTANCE_HPP
#define HYPOW_ACCEPTANCE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hypow {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  long long ms = 0;
};

std::vector<CriterionResult> run_acceptance_suite();

// One line per criterion plus a summary; returns the number of failures.
int print_acceptance_suite(std::ostream& out);

}  // namespace hypow

#endif
