// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
// Optional arguments restrict the run to the listed criterion ids.

#include <cstdlib>
#include <iostream>

#include "modgame/acceptance.hpp"

int main(int argc, char** argv) {
  modgame::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) options.only.push_back(std::atoi(argv[i]));
  const auto results = modgame::run_acceptance(options, &std::cout);
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed;
  std::cout << passed << "/" << results.size() << " criteria passed" << std::endl;
  return passed == results.size() ? EXIT_SUCCESS : EXIT_FAILURE;
}
