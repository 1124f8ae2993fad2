#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arrtool/arrangement.hpp"
#include "arrtool/corpus.hpp"
#include "arrtool/incidence.hpp"

namespace test {

// y = a x + b for each (a, b).
inline arrtool::Arrangement lines(const std::vector<std::pair<std::string, std::string>>& ab) {
  std::vector<arrtool::LineSpec> specs;
  for (const auto& [a, b] : ab) specs.push_back({a, b, false});
  return arrtool::make_arrangement(specs);
}

inline arrtool::OrderedIncidenceGraph ordered(const std::string& corpus_name) {
  return arrtool::build_ordered_graph(arrtool::corpus_entry(corpus_name).arrangement);
}

}  // namespace test
