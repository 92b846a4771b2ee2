#pragma once

#include "irrmaps/kernel.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace irrmaps {

struct SuiteReport {
  std::string name;
  std::vector<CheckResult> checks;
  double seconds = 0;
  double budget = 0;  // wall-clock limit in seconds, 0 for none

  int failures() const;
  bool in_time() const { return budget <= 0 || seconds < budget; }
  bool ok() const { return failures() == 0 && in_time(); }
};

// Printed series tables of the hexangular, pentagonal and weakly
// irreducible families.
SuiteReport paper_tables_suite();
// Closed coefficient formulas for the hexagon, the square and simple
// boundaries.
SuiteReport closed_coefficient_suite();
// Pointing, substitution, ballot sums, matrix inverses, annular, two-face.
SuiteReport identity_suite();
// Exhaustive maps up to 7 edges against the boundary series.
SuiteReport oracle_suite(int jobs = 1);
// Tree/slice closure and opening, leaf and depth censuses, bipartite trees.
SuiteReport bijection_suite();
// Hierarchies, product forms, conserved quantities.
SuiteReport integrable_suite();
// Conjectured elimination polynomials and the two bipartite equations.
SuiteReport conjecture_suite();

// Names accepted by run_suite, in acceptance order.
const std::vector<std::string>& suite_names();
// Throws std::invalid_argument on an unknown name.
SuiteReport run_suite(const std::string& name, int jobs = 1);

nlohmann::json suite_summary(const std::vector<SuiteReport>& reports);

}  // namespace irrmaps
