#include <iostream>

#include "bisetkit/acceptance.hpp"

int main() {
  int failed = 0;
  bisetkit::run_acceptance([&](const bisetkit::CriterionResult& r) {
    bisetkit::print_result(std::cout, r);
    std::cout.flush();
    failed += !r.pass;
  });
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << "\n";
  return failed == 0 ? 0 : 1;
}
