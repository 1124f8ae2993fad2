#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "arrtool/batch.hpp"
#include "arrtool/corpus.hpp"
#include "arrtool/presentation.hpp"

namespace arrtool {

struct CheckOptions {
  Convention convention = Convention::geometric;
  Variant variant = Variant::thm4;
  std::uint64_t seed = 20240229;
  ExecutionMode mode = ExecutionMode::parallel;
  std::size_t relabelings = 100;
  std::size_t graph_words = 1000;
  std::size_t cycles = 100;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;  // 0 = no limit
};

CheckResult check_h1_cross_oracle(const std::vector<CorpusEntry>& corpus, const CheckOptions& o);
CheckResult check_complement_homology(const std::vector<CorpusEntry>& corpus, const CheckOptions& o);
CheckResult check_pencil_oracle(const CheckOptions& o);
CheckResult check_gluing_algebra(const std::vector<CorpusEntry>& corpus, const CheckOptions& o);
CheckResult check_combinatorial_invariance(const std::vector<CorpusEntry>& corpus, const CheckOptions& o);
CheckResult check_bass_serre(const CheckOptions& o);
CheckResult check_fmap_injectivity(const CheckOptions& o);
CheckResult check_relator_count(const std::vector<CorpusEntry>& corpus, const CheckOptions& o);
CheckResult check_disconnected_case(const std::vector<CorpusEntry>& corpus, const CheckOptions& o);
CheckResult check_wiring_consistency(const std::vector<CorpusEntry>& corpus, const CheckOptions& o);

/// All of the above, in that order.
std::vector<CheckResult> run_acceptance(const std::vector<CorpusEntry>& corpus, const CheckOptions& o);

/// "PASS name (0.012 s) detail" / "FAIL ..."; timing omitted when
/// `with_timing` is false so reports are reproducible.
std::string format_result(const CheckResult& r, bool with_timing = true);

}  // namespace arrtool
