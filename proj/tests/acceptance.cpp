// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "ietlab/verify.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
  ietlab::verify::Options options;
  if (argc > 1) options.workers = static_cast<unsigned>(std::stoul(argv[1]));
  ietlab::verify::Session session(options);
  int failed = 0;
  for (const auto& [id, criterion] : ietlab::verify::criteria()) {
    const auto result = criterion(session);
    failed += result.passed ? 0 : 1;
    std::cout << ietlab::verify::format(result) << std::endl;
  }
  std::cout << (failed == 0 ? "all 11 criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
