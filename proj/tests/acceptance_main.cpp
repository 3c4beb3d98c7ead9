// Runs criteria A1-A10 at full budget and prints one line per criterion.

#include <iostream>

#include "ramsey/acceptance.hpp"

int main() {
  using namespace ramsey::acceptance;
  const auto results = run_suite(SuiteOptions{}, [](const CriterionResult& r) { std::cout << format_line(r) << std::endl; });
  int failed = 0;
  for (const auto& r : results) failed += r.status != Status::Pass;
  std::cout << results.size() - failed << "/" << results.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
