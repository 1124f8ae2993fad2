#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "arrtool/arrangement.hpp"

namespace arrtool {

struct CorpusEntry {
  std::string name;
  std::string document;
  Arrangement arrangement;
};

/// parallel-pair, two-generic, pencil-2 .. pencil-5, triangle, generic-4,
/// near-pencil.
const std::vector<CorpusEntry>& builtin_corpus();

/// Throws std::out_of_range for unknown names.
const CorpusEntry& corpus_entry(std::string_view name);

/// k lines y = i x through the origin.
Arrangement pencil(std::size_t k);
/// k lines y = i.
Arrangement parallel_lines(std::size_t k);

}  // namespace arrtool
