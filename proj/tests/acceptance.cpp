// Runs every acceptance criterion on the built-in corpus and prints one
// PASS/FAIL line per criterion. Exit status 0 iff all pass.
#include <cstdlib>
#include <iostream>
#include <string>

#include "arrtool/checks.hpp"

int main(int argc, char** argv) {
  arrtool::CheckOptions options;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--serial") options.mode = arrtool::ExecutionMode::serial;
    else if (arg.rfind("--seed=", 0) == 0) options.seed = std::stoull(arg.substr(7));
  }
  bool all = true;
  for (const auto& r : arrtool::run_acceptance(arrtool::builtin_corpus(), options)) {
    std::cout << arrtool::format_result(r) << std::endl;
    all = all && r.passed;
  }
  std::cout << (all ? "all criteria pass" : "some criteria FAIL") << '\n';
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
