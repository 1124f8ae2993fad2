#include "arrtool/corpus.hpp"

#include <stdexcept>

namespace arrtool {

namespace {

std::string pencil_document(std::size_t k) {
  std::string doc = "lines:\n";
  for (std::size_t i = 0; i < k; ++i) doc += "  - {a: " + std::to_string(i) + ", b: 0}\n";
  return doc;
}

std::vector<CorpusEntry> make_corpus() {
  std::vector<std::pair<std::string, std::string>> docs = {
      {"parallel-pair", "lines:\n  - {a: 1, b: 0}\n  - {a: 1, b: 1}\n"},
      {"two-generic", "lines:\n  - {a: 1, b: 0}\n  - {a: -1, b: 0}\n"},
  };
  for (std::size_t k = 2; k <= 5; ++k) docs.push_back({"pencil-" + std::to_string(k), pencil_document(k)});
  docs.push_back({"triangle", "lines:\n  - {a: 0, b: 0}\n  - {a: 1, b: 0}\n  - {a: -1, b: 1}\n"});
  docs.push_back({"generic-4", "lines:\n  - {a: 0, b: 0}\n  - {a: 1, b: 1}\n  - {a: -1, b: 3}\n  - {a: 2, b: -5}\n"});
  docs.push_back({"near-pencil", "lines:\n  - {a: 0, b: 0}\n  - {a: 1, b: 0}\n  - {a: -1, b: 0}\n  - {a: 2, b: 1}\n"});
  std::vector<CorpusEntry> out;
  for (auto& [name, doc] : docs) out.push_back({name, doc, parse_arrangement(doc)});
  return out;
}

}  // namespace

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = make_corpus();
  return corpus;
}

const CorpusEntry& corpus_entry(std::string_view name) {
  for (const auto& e : builtin_corpus())
    if (e.name == name) return e;
  throw std::out_of_range("no corpus entry named " + std::string(name));
}

Arrangement pencil(std::size_t k) {
  std::vector<Line> lines;
  for (std::size_t i = 0; i < k; ++i) lines.push_back({i, Rational(static_cast<long long>(i)), Rational(0)});
  return Arrangement::from_lines(std::move(lines));
}

Arrangement parallel_lines(std::size_t k) {
  std::vector<Line> lines;
  for (std::size_t i = 0; i < k; ++i) lines.push_back({i, Rational(0), Rational(static_cast<long long>(i))});
  return Arrangement::from_lines(std::move(lines));
}

}  // namespace arrtool
