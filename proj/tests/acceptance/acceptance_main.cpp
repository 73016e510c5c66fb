// Release gate: one line per criterion, non-zero exit if any fails.

#include <iostream>

#include "braidskein/acceptance.hpp"
#include "braidskein/parallel.hpp"

int main() {
  std::cout << "acceptance suite (" << braidskein::max_threads() << " threads)" << std::endl;
  int failed = 0;
  for (int id : braidskein::selected_criteria({})) {
    const auto r = braidskein::run_criterion(id);
    std::cout << braidskein::format_result(r) << std::endl;
    failed += !r.passed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
