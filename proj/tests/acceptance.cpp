// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <iostream>

#include "cremona/acceptance.hpp"

int main(int argc, char** argv) {
  cremona::AcceptanceOptions opt;
  for (int i = 1; i < argc; ++i) opt.only.push_back(std::atoi(argv[i]));
  auto rep = cremona::run_acceptance(opt, [](const cremona::CriterionResult& r) { std::cout << cremona::result_line(r) << std::endl; });
  std::cout << (rep.all_pass() ? "all criteria pass" : "acceptance FAILED") << std::endl;
  return rep.all_pass() ? 0 : 1;
}
