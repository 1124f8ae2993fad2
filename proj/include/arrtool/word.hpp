#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace arrtool {

enum class SymbolKind { lambda, mu, stable, named };

/// Generator of a presentation. Structured symbols belong to a graph vertex
/// (lambda, mu with a 1-based slot) or to a conjugate edge pair (stable);
/// named symbols are free-standing.
struct Symbol {
  SymbolKind kind = SymbolKind::named;
  std::size_t index = 0;  // vertex id, or pair index for stable letters
  std::size_t rank = 0;   // mu slot
  std::string name;

  static Symbol lambda(std::size_t vertex, const std::string& vertex_name);
  static Symbol mu(std::size_t vertex, std::size_t slot, const std::string& vertex_name);
  static Symbol stable(std::size_t pair);
  static Symbol named(std::string name);

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b);
};

struct Syllable {
  Symbol symbol;
  long long exponent = 0;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Word in the free group, kept freely reduced: adjacent syllables have
/// distinct symbols and no exponent is zero.
class Word {
 public:
  Word() = default;
  explicit Word(Symbol s, long long exponent = 1);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }
  /// Sum of absolute exponents.
  std::size_t length() const;
  long long exponent_sum(const Symbol& s) const;
  bool contains(const Symbol& s) const;

  /// Appends s^exponent, merging with the last syllable.
  Word& append(const Symbol& s, long long exponent = 1);
  Word& operator*=(const Word& other);
  friend Word operator*(Word a, const Word& b) { return a *= b; }

  Word inverse() const;
  Word power(long long n) const;

  /// Space-separated `sym^k` tokens (exponent omitted when 1); "1" if empty.
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend bool operator<(const Word& a, const Word& b);

 private:
  std::vector<Syllable> syllables_;
};

Word commutator(const Word& a, const Word& b);

/// Conjugate-reduced representative: strips matching first/last syllables.
Word cyclically_reduce(const Word& w);

/// Parses `str()` output. Token names are matched against `generators`;
/// an unknown name throws MalformedWord.
Word parse_word(std::string_view text, const std::vector<Symbol>& generators);
/// Same, with every token read as a named symbol.
Word parse_word(std::string_view text);

}  // namespace arrtool
