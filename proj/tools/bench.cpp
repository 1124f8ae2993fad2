// Serial vs OpenMP timings for the randomized batch checks.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>

#include <omp.h>

#include "arrtool/checks.hpp"
#include "arrtool/corpus.hpp"

using namespace arrtool;

namespace {

double time_it(const std::function<CheckResult()>& fn, bool& passed) {
  const auto t0 = std::chrono::steady_clock::now();
  passed = fn().passed;
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  // Optional scale factor on trial counts.
  const std::size_t scale = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 4;
  const auto& corpus = builtin_corpus();
  CheckOptions base;
  base.relabelings *= scale;
  base.graph_words *= scale;
  base.cycles *= scale;

  struct Case {
    std::string name;
    std::function<CheckResult(const CheckOptions&)> run;
  };
  const Case cases[] = {
      {"combinatorial-invariance", [&](const CheckOptions& o) { return check_combinatorial_invariance(corpus, o); }},
      {"bass-serre-reduction", [](const CheckOptions& o) { return check_bass_serre(o); }},
      {"fmap-injectivity", [](const CheckOptions& o) { return check_fmap_injectivity(o); }},
  };

  std::cout << "threads=" << omp_get_max_threads() << " scale=" << scale << '\n';
  std::cout << std::left << std::setw(26) << "check" << std::right << std::setw(10) << "serial" << std::setw(10)
            << "parallel" << std::setw(9) << "speedup" << '\n';
  bool ok = true;
  for (const Case& c : cases) {
    CheckOptions serial = base, parallel = base;
    serial.mode = ExecutionMode::serial;
    parallel.mode = ExecutionMode::parallel;
    bool ps = false, pp = false;
    const double ts = time_it([&] { return c.run(serial); }, ps);
    const double tp = time_it([&] { return c.run(parallel); }, pp);
    ok = ok && ps && pp;
    std::cout << std::left << std::setw(26) << c.name << std::right << std::fixed << std::setprecision(3)
              << std::setw(10) << ts << std::setw(10) << tp << std::setw(8) << std::setprecision(2) << ts / tp
              << "x" << (ps && pp ? "" : "  FAIL") << '\n';
  }
  return ok ? 0 : 1;
}
