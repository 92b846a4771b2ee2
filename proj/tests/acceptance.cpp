// One verdict line per acceptance criterion, in order.
#include "irrmaps/suites.hpp"

#include <cstdio>
#include <thread>

using namespace irrmaps;

int main() {
  const int jobs = std::max(1u, std::thread::hardware_concurrency());
  bool all = true;
  int criterion = 0;
  for (const auto& name : suite_names()) {
    ++criterion;
    SuiteReport rep = run_suite(name, jobs);
    std::printf("criterion %d %-20s %s  (%zu checks, %.1fs of %.0fs)\n", criterion, name.c_str(),
                rep.ok() ? "PASS" : "FAIL", rep.checks.size(), rep.seconds, rep.budget);
    int shown = 0;
    for (const auto& c : rep.checks)
      if (!c.ok && shown++ < 5) std::printf("    failed: %s: %s\n", c.name.c_str(), c.detail.c_str());
    if (!rep.in_time()) std::printf("    over the time budget\n");
    std::fflush(stdout);
    all = all && rep.ok();
  }
  return all ? 0 : 1;
}
